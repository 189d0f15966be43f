//! Sparse six-variable polynomials with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

use super::monomial::{Monomial, Var, NVARS};

/// A polynomial in (a, b, g, d, q, u) stored as a term map.
///
/// Invariants: no stored coefficient is zero; term order is graded-lex, so
/// equality is term-map equality and serialization is canonical (descending
/// graded-lex, leading term first).
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct GfPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl GfPoly {
    pub fn zero() -> GfPoly {
        GfPoly::default()
    }

    pub fn one() -> GfPoly {
        GfPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> GfPoly {
        let mut p = GfPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> GfPoly {
        GfPoly::from_monomial(Monomial::var(v), BigInt::one())
    }

    pub fn from_monomial(m: Monomial, c: BigInt) -> GfPoly {
        let mut p = GfPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Largest total degree among terms (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Accumulate `c` onto the coefficient of `m`, dropping it if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_assign_ref(&mut self, other: &GfPoly) {
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &GfPoly) {
        for (m, c) in &other.terms {
            self.add_term(*m, -c.clone());
        }
    }

    pub fn mul_ref(&self, other: &GfPoly) -> GfPoly {
        let mut out = GfPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigInt) -> GfPoly {
        if c.is_zero() {
            return GfPoly::zero();
        }
        let mut out = GfPoly::zero();
        for (m, c0) in &self.terms {
            out.add_term(*m, c0 * c);
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> GfPoly {
        let mut out = GfPoly::zero();
        for (m0, c0) in &self.terms {
            out.add_term(m0.mul(m), c0.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> GfPoly {
        let mut acc = GfPoly::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Exact substitution of a rational point for (a, b, g, d, q, u).
    pub fn eval(&self, point: &[BigRational; NVARS]) -> BigRational {
        // Per-variable power tables avoid recomputing big powers per term.
        let mut max_exp = [0u32; NVARS];
        for m in self.terms.keys() {
            for (cap, e) in max_exp.iter_mut().zip(m.exps()) {
                *cap = (*cap).max(*e);
            }
        }
        let pows: Vec<Vec<BigRational>> = (0..NVARS)
            .map(|i| {
                let mut t = Vec::with_capacity(max_exp[i] as usize + 1);
                t.push(BigRational::one());
                for e in 1..=max_exp[i] as usize {
                    let next = &t[e - 1] * &point[i];
                    t.push(next);
                }
                t
            })
            .collect();
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from(c.clone());
            for (table, &e) in pows.iter().zip(m.exps()) {
                if e > 0 {
                    term *= &table[e as usize];
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitute u = 1: project the u-exponent away, merging terms.
    pub fn set_u_one(&self) -> GfPoly {
        let mut out = GfPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.set_u_one(), c.clone());
        }
        out
    }

    /// Restore the u-grading of a u-free polynomial whose terms all came from
    /// monomials of total degree `target`: each term gets u^(target - degree).
    pub fn homogenize_u(&self, target: u32) -> Result<GfPoly> {
        let mut out = GfPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(Var::U) != 0 {
                return Err(Error::Domain("polynomial already involves u".into()));
            }
            let d = m.degree();
            if d > target {
                return Err(Error::Domain(format!(
                    "term of degree {d} exceeds homogenization target {target}"
                )));
            }
            out.add_term(m.mul_var(Var::U, target - d), c.clone());
        }
        Ok(out)
    }

    /// Exchange variables pairwise, e.g. the (a<->d, b<->g, u<->q) relabeling.
    pub fn swap_vars(&self, pairs: &[(Var, Var)]) -> GfPoly {
        let mut out = GfPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.swap_vars(pairs), c.clone());
        }
        out
    }

    /// Canonical text form: terms joined by ` + ` in descending graded-lex
    /// order, each term as `coeff*vars` with a unit coefficient elided.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.iter().rev() {
            if m.is_one() {
                parts.push(c.to_string());
            } else if c.is_one() {
                parts.push(m.to_string());
            } else {
                parts.push(format!("{}*{}", c, m));
            }
        }
        parts.join(" + ")
    }

    /// Parse the text form produced by [`GfPoly::to_text`].
    pub fn parse_text(s: &str) -> Result<GfPoly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial text".into()));
        }
        if s == "0" {
            return Ok(GfPoly::zero());
        }
        let mut out = GfPoly::zero();
        for part in s.split(" + ") {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::Parse("empty term".into()));
            }
            let (coeff, vars) = match part.split_once('*') {
                Some((c, v)) => {
                    let c: BigInt = c
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient in `{part}`")))?;
                    (c, v.trim())
                }
                None => {
                    // Either a bare integer or a coefficient-1 monomial.
                    if let Ok(c) = part.parse::<BigInt>() {
                        out.add_term(Monomial::one(), c);
                        continue;
                    }
                    (BigInt::one(), part)
                }
            };
            let mut exps = [0u32; NVARS];
            for tok in vars.split_whitespace() {
                let (name, e) = match tok.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?,
                    ),
                    None => (tok, 1),
                };
                let v = Var::from_name(name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                exps[v.index()] += e;
            }
            out.add_term(Monomial::from_exps(exps), coeff);
        }
        Ok(out)
    }

    /// JSON form: a list of `{"exp":[i,j,k,l,m,n],"coeff":"<decimal>"}` in
    /// canonical (descending graded-lex) order.
    pub fn to_json(&self) -> Value {
        let list: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| json!({"exp": m.exps().to_vec(), "coeff": c.to_string()}))
            .collect();
        Value::Array(list)
    }

    pub fn from_json(v: &Value) -> Result<GfPoly> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial JSON must be a list".into()))?;
        let mut out = GfPoly::zero();
        for item in arr {
            let exp = item
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("term missing `exp`".into()))?;
            if exp.len() != NVARS {
                return Err(Error::Parse(format!("`exp` must have {NVARS} entries")));
            }
            let mut exps = [0u32; NVARS];
            for (i, e) in exp.iter().enumerate() {
                exps[i] = e
                    .as_u64()
                    .ok_or_else(|| Error::Parse("exponents must be non-negative".into()))?
                    as u32;
            }
            let coeff: BigInt = item
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("term missing `coeff`".into()))?
                .parse()
                .map_err(|_| Error::Parse("bad coefficient string".into()))?;
            out.add_term(Monomial::from_exps(exps), coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for GfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Add for &GfPoly {
    type Output = GfPoly;
    fn add(self, rhs: &GfPoly) -> GfPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &GfPoly {
    type Output = GfPoly;
    fn sub(self, rhs: &GfPoly) -> GfPoly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Mul for &GfPoly {
    type Output = GfPoly;
    fn mul(self, rhs: &GfPoly) -> GfPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &GfPoly {
    type Output = GfPoly;
    fn neg(self) -> GfPoly {
        GfPoly::zero().sub_assign_ref_owned(self)
    }
}

impl GfPoly {
    fn sub_assign_ref_owned(mut self, other: &GfPoly) -> GfPoly {
        self.sub_assign_ref(other);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_rational;
    use proptest::prelude::*;

    fn var(v: Var) -> GfPoly {
        GfPoly::var(v)
    }

    #[test]
    fn add_basics() {
        let sum = &var(Var::Alpha) + &var(Var::Beta);
        assert_eq!(sum.num_terms(), 2);
        let cancel = &var(Var::Alpha) - &var(Var::Alpha);
        assert!(cancel.is_zero());
        let z1 = &(&var(Var::Alpha) + &var(Var::Beta)) + &(&var(Var::Gamma) + &var(Var::Delta));
        assert_eq!(z1.to_text(), "a + b + g + d");
    }

    #[test]
    fn mul_basics() {
        let ab = &var(Var::Alpha) * &var(Var::Beta);
        assert_eq!(ab.to_text(), "a b");
        let apd = &var(Var::Alpha) + &var(Var::Delta);
        let sq = &apd * &apd;
        assert_eq!(sq.to_text(), "a^2 + 2*a d + d^2");
        // delta * delta, then an exponent bump by q.
        let dd = &var(Var::Delta) * &var(Var::Delta);
        let ddq = dd.mul_monomial(&Monomial::var(Var::Q));
        assert_eq!(ddq.to_text(), "d^2 q");
    }

    #[test]
    fn eval_at_rational_point() {
        let p = &(&var(Var::Alpha) + &var(Var::Beta)) + &(&var(Var::Gamma) + &var(Var::Delta));
        let point = [
            parse_rational("1/2").unwrap(),
            parse_rational("1/3").unwrap(),
            parse_rational("1/5").unwrap(),
            parse_rational("1/7").unwrap(),
            parse_rational("0").unwrap(),
            parse_rational("0").unwrap(),
        ];
        assert_eq!(p.eval(&point), parse_rational("247/210").unwrap());
    }

    #[test]
    fn eval_at_zero_gives_constant_term() {
        let mut p = GfPoly::var(Var::Q);
        p.add_term(Monomial::one(), BigInt::from(7));
        let zeros: [BigRational; NVARS] = Default::default();
        assert_eq!(p.eval(&zeros), BigRational::from(BigInt::from(7)));
    }

    #[test]
    fn text_form_examples() {
        assert_eq!(GfPoly::zero().to_text(), "0");
        assert_eq!(GfPoly::parse_text("0").unwrap(), GfPoly::zero());
        let p = GfPoly::parse_text("2*a b^2 + -3*q + 5").unwrap();
        assert_eq!(p.to_text(), "2*a b^2 + -3*q + 5");
    }

    #[test]
    fn homogenize_u_restores_grading() {
        // a^2 + a d q at u = 1, from degree-3 monomials.
        let mut p = GfPoly::zero();
        p.add_term(Monomial::from_exps([2, 0, 0, 0, 0, 0]), BigInt::one());
        p.add_term(Monomial::from_exps([1, 0, 0, 1, 1, 0]), BigInt::one());
        let h = p.homogenize_u(3).unwrap();
        assert_eq!(h.to_text(), "a^2 u + a d q");
        assert_eq!(h.set_u_one(), p);
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        proptest::array::uniform6(0u32..5).prop_map(Monomial::from_exps)
    }

    fn arb_poly() -> impl Strategy<Value = GfPoly> {
        proptest::collection::vec((arb_monomial(), -20i64..20), 0..6).prop_map(|terms| {
            let mut p = GfPoly::zero();
            for (m, c) in terms {
                p.add_term(m, BigInt::from(c));
            }
            p
        })
    }

    fn arb_point() -> impl Strategy<Value = [BigRational; NVARS]> {
        proptest::array::uniform6((-9i64..9, 1i64..9)).prop_map(|pairs| {
            pairs.map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        }
    }

    proptest! {
        #[test]
        fn serialization_roundtrips(p in arb_poly()) {
            prop_assert_eq!(GfPoly::parse_text(&p.to_text()).unwrap(), p.clone());
            prop_assert_eq!(GfPoly::from_json(&p.to_json()).unwrap(), p);
        }

        #[test]
        fn eval_is_ring_homomorphism(p in arb_poly(), q in arb_poly(), point in arb_point()) {
            prop_assert_eq!((&p + &q).eval(&point), p.eval(&point) + q.eval(&point));
            prop_assert_eq!((&p * &q).eval(&point), p.eval(&point) * q.eval(&point));
        }
    }
}
