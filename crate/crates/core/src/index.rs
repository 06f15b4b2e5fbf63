use std::fmt;

/// Index of an indexed propositional symbol.
///
/// `Const(k)` is a concrete natural number, `Param(k)` stands for `n + k`
/// where `n` is the single arithmetic parameter of a problem, and
/// `IndVar(k)` stands for `i + k` where `i` is the induction variable of a
/// rewrite-rule body. `IndVar` never occurs in schemata or ground formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndexExpr {
    Const(u64),
    Param(u64),
    IndVar(u64),
}

impl IndexExpr {
    pub fn is_const(self) -> bool {
        matches!(self, IndexExpr::Const(_))
    }

    pub fn has_param(self) -> bool {
        matches!(self, IndexExpr::Param(_))
    }

    pub fn has_ind_var(self) -> bool {
        matches!(self, IndexExpr::IndVar(_))
    }

    /// Substitutes the parameter: `n <- k`.
    pub fn instantiate(self, k: u64) -> IndexExpr {
        match self {
            IndexExpr::Param(c) => IndexExpr::Const(k + c),
            other => other,
        }
    }

    /// Substitutes the parameter: `n <- n + 1`.
    pub fn shift_param(self) -> IndexExpr {
        match self {
            IndexExpr::Param(c) => IndexExpr::Param(c + 1),
            other => other,
        }
    }

    /// Substitutes the induction variable `i` by a base index, so `i + k`
    /// becomes `base + k`. Used when unfolding an inductive rule body.
    pub fn subst_ind_var(self, base: IndexExpr) -> IndexExpr {
        match self {
            IndexExpr::IndVar(c) => match base {
                IndexExpr::Const(b) => IndexExpr::Const(b + c),
                IndexExpr::Param(b) => IndexExpr::Param(b + c),
                IndexExpr::IndVar(b) => IndexExpr::IndVar(b + c),
            },
            other => other,
        }
    }
}

impl fmt::Display for IndexExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexExpr::Const(k) => write!(f, "{k}"),
            IndexExpr::Param(0) => write!(f, "n"),
            IndexExpr::Param(k) => write!(f, "n+{k}"),
            IndexExpr::IndVar(0) => write!(f, "i"),
            IndexExpr::IndVar(k) => write!(f, "i+{k}"),
        }
    }
}
