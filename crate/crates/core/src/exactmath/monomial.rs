//! Monomials: exponent vectors over the fixed variable order (a, b, g, d, q, u).

use std::cmp::Ordering;
use std::fmt;

/// Number of variables.
pub const NVARS: usize = 6;

/// The six named variables, in their fixed order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Q,
    U,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Alpha, Var::Beta, Var::Gamma, Var::Delta, Var::Q, Var::U];

    pub fn index(self) -> usize {
        match self {
            Var::Alpha => 0,
            Var::Beta => 1,
            Var::Gamma => 2,
            Var::Delta => 3,
            Var::Q => 4,
            Var::U => 5,
        }
    }

    /// Single-letter print name: `a, b, g, d, q, u`.
    pub fn name(self) -> &'static str {
        ["a", "b", "g", "d", "q", "u"][self.index()]
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }
}

/// An exponent vector in the six fixed variables.
///
/// Ordered graded-lexicographically: first by total degree, ties broken by
/// the exponent vector itself (earlier variables weigh more). Canonical
/// serialization lists terms in *descending* graded-lex order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: [u32; NVARS],
}

impl Monomial {
    /// The empty product (all exponents zero).
    pub fn one() -> Monomial {
        Monomial { exps: [0; NVARS] }
    }

    pub fn var(v: Var) -> Monomial {
        let mut exps = [0; NVARS];
        exps[v.index()] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: [u32; NVARS]) -> Monomial {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32; NVARS] {
        &self.exps
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Product of monomials: exponent-vector addition.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(&other.exps) {
            *e += o;
        }
        Monomial { exps }
    }

    pub fn mul_var(&self, v: Var, e: u32) -> Monomial {
        let mut exps = self.exps;
        exps[v.index()] += e;
        Monomial { exps }
    }

    /// Exchange the exponents of the given variable pairs.
    pub fn swap_vars(&self, pairs: &[(Var, Var)]) -> Monomial {
        let mut exps = self.exps;
        for &(x, y) in pairs {
            exps.swap(x.index(), y.index());
        }
        Monomial { exps }
    }

    /// Project the u-exponent away (substitute u = 1).
    pub fn set_u_one(&self) -> Monomial {
        let mut exps = self.exps;
        exps[Var::U.index()] = 0;
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.exps).cmp(&(other.degree(), other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// Space-joined variable powers, unit exponents elided: `a^2 b q`.
    /// The empty product prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_is_degree_first() {
        let a = Monomial::var(Var::Alpha);
        let b = Monomial::var(Var::Beta);
        let ab = a.mul(&b);
        assert!(ab > a, "higher degree wins");
        assert!(a > b, "ties broken on the earlier variable");
        assert!(Monomial::var(Var::Q) > Monomial::var(Var::U));
    }

    #[test]
    fn display_elides_units() {
        let m = Monomial::from_exps([2, 1, 0, 0, 1, 0]);
        assert_eq!(m.to_string(), "a^2 b q");
        assert_eq!(Monomial::one().to_string(), "1");
    }
}
