use crate::index::IndexExpr;
use std::fmt;

/// An indexed propositional atom. `defined` marks symbols whose meaning is
/// given by rewrite rules rather than by an interpretation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub sym: String,
    pub index: IndexExpr,
    pub defined: bool,
}

impl Atom {
    pub fn new(sym: impl Into<String>, index: IndexExpr) -> Self {
        Atom { sym: sym.into(), index, defined: false }
    }

    pub fn defined(sym: impl Into<String>, index: IndexExpr) -> Self {
        Atom { sym: sym.into(), index, defined: true }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.sym, self.index)
    }
}

/// Formula over indexed atoms. The variant order drives the total syntactic
/// order used for canonical formula sets (`Ord` is derived).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Bot,
    Top,
    Atom(Atom),
    Not(Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(sym: impl Into<String>, index: IndexExpr) -> Formula {
        Formula::Atom(Atom::new(sym, index))
    }

    pub fn def_atom(sym: impl Into<String>, index: IndexExpr) -> Formula {
        Formula::Atom(Atom::defined(sym, index))
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    /// Conjunction of a list, `Top` when empty.
    pub fn conj(parts: impl IntoIterator<Item = Formula>) -> Formula {
        let mut it = parts.into_iter();
        match it.next() {
            None => Formula::Top,
            Some(first) => it.fold(first, Formula::and),
        }
    }

    /// Disjunction of a list, `Bot` when empty.
    pub fn disj(parts: impl IntoIterator<Item = Formula>) -> Formula {
        let mut it = parts.into_iter();
        match it.next() {
            None => Formula::Bot,
            Some(first) => it.fold(first, Formula::or),
        }
    }

    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Bot | Formula::Top | Formula::Atom(_) => vec![],
            Formula::Not(a) => vec![a],
            Formula::Or(a, b)
            | Formula::And(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => vec![a, b],
        }
    }

    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        self.visit_atoms(&mut |a| out.push(a));
        out
    }

    fn visit_atoms<'a>(&'a self, f: &mut impl FnMut(&'a Atom)) {
        match self {
            Formula::Atom(a) => f(a),
            other => {
                for c in other.children() {
                    c.visit_atoms(f);
                }
            }
        }
    }

    pub fn has_param(&self) -> bool {
        self.atoms().iter().any(|a| a.index.has_param())
    }

    pub fn has_ind_var(&self) -> bool {
        self.atoms().iter().any(|a| a.index.has_ind_var())
    }

    fn map_indices(&self, f: &impl Fn(IndexExpr) -> IndexExpr) -> Formula {
        match self {
            Formula::Bot => Formula::Bot,
            Formula::Top => Formula::Top,
            Formula::Atom(a) => Formula::Atom(Atom { sym: a.sym.clone(), index: f(a.index), defined: a.defined }),
            Formula::Not(a) => Formula::not(a.map_indices(f)),
            Formula::Or(a, b) => Formula::or(a.map_indices(f), b.map_indices(f)),
            Formula::And(a, b) => Formula::and(a.map_indices(f), b.map_indices(f)),
            Formula::Implies(a, b) => Formula::implies(a.map_indices(f), b.map_indices(f)),
            Formula::Iff(a, b) => Formula::iff(a.map_indices(f), b.map_indices(f)),
        }
    }

    /// `self{n <- k}`: replaces the parameter by a concrete value.
    pub fn instantiate(&self, k: u64) -> Formula {
        self.map_indices(&|ix| ix.instantiate(k))
    }

    /// `self{n <- n+1}`.
    pub fn shift_param(&self) -> Formula {
        self.map_indices(&|ix| ix.shift_param())
    }

    /// `self{i <- base}`: instantiates the induction variable of a rule body.
    pub fn subst_ind_var(&self, base: IndexExpr) -> Formula {
        self.map_indices(&|ix| ix.subst_ind_var(base))
    }

    /// True for `p[k]` or `~p[k]` with a non-defined symbol.
    pub fn is_literal(&self) -> bool {
        match self {
            Formula::Atom(a) => !a.defined,
            Formula::Not(inner) => matches!(&**inner, Formula::Atom(a) if !a.defined),
            _ => false,
        }
    }

    /// The atom under a literal or (possibly negated) atom formula.
    pub fn literal_atom(&self) -> Option<(&Atom, bool)> {
        match self {
            Formula::Atom(a) => Some((a, true)),
            Formula::Not(inner) => match &**inner {
                Formula::Atom(a) => Some((a, false)),
                _ => None,
            },
            _ => None,
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Formula::Bot | Formula::Top | Formula::Atom(_) => 5,
            Formula::Not(_) => 4,
            Formula::And(_, _) => 3,
            Formula::Or(_, _) => 2,
            Formula::Implies(_, _) => 1,
            Formula::Iff(_, _) => 0,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, parent: u8, right: bool) -> fmt::Result {
        let prec = self.prec();
        let needs = prec < parent || (prec == parent && right && prec >= 2) || (prec == parent && !right && prec == 1);
        if needs {
            write!(f, "(")?;
        }
        match self {
            Formula::Bot => write!(f, "F")?,
            Formula::Top => write!(f, "T")?,
            Formula::Atom(a) => write!(f, "{a}")?,
            Formula::Not(a) => {
                write!(f, "~")?;
                a.fmt_prec(f, 4, true)?;
            }
            Formula::And(a, b) => {
                a.fmt_prec(f, 3, false)?;
                write!(f, " & ")?;
                b.fmt_prec(f, 3, true)?;
            }
            Formula::Or(a, b) => {
                a.fmt_prec(f, 2, false)?;
                write!(f, " | ")?;
                b.fmt_prec(f, 2, true)?;
            }
            Formula::Implies(a, b) => {
                a.fmt_prec(f, 1, false)?;
                write!(f, " => ")?;
                b.fmt_prec(f, 1, true)?;
            }
            Formula::Iff(a, b) => {
                a.fmt_prec(f, 0, false)?;
                write!(f, " <=> ")?;
                b.fmt_prec(f, 0, true)?;
            }
        }
        if needs {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::IndexExpr::*;

    #[test]
    fn instantiate_offsets() {
        let f = Formula::atom("p", Param(1));
        assert_eq!(f.instantiate(4), Formula::atom("p", Const(5)));
    }

    #[test]
    fn display_round_shape() {
        let f = Formula::and(
            Formula::atom("p", Const(0)),
            Formula::and(Formula::not(Formula::atom("p", Param(0))), Formula::def_atom("v", Param(0))),
        );
        assert_eq!(f.to_string(), "p[0] & (~p[n] & v[n])");
    }

    #[test]
    fn literal_shapes() {
        assert!(Formula::not(Formula::atom("p", Const(1))).is_literal());
        assert!(!Formula::def_atom("v", Param(0)).is_literal());
        assert!(!Formula::not(Formula::def_atom("v", Const(0))).is_literal());
    }
}
