//! Askey-Wilson moments via two independent exact pipelines: the staircase
//! partition-function formula, and a Motzkin-path expansion of the monic
//! three-term recurrence. Everything is normalized by the zeroth moment, so
//! no infinite products are ever evaluated.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{rational_pow, GfPoly};
use crate::tableaux;

/// The five polynomial parameters. Orthogonality holds for |a|,|b|,|c|,|d|,
/// |q| < 1; outside that box the identities are checked wherever both
/// pipelines are defined.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AwParams {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
    pub q: BigRational,
}

impl AwParams {
    pub fn new(
        a: BigRational,
        b: BigRational,
        c: BigRational,
        d: BigRational,
        q: BigRational,
    ) -> AwParams {
        AwParams { a, b, c, d, q }
    }

    pub fn in_orthogonality_regime(&self) -> bool {
        let one = BigRational::one();
        [&self.a, &self.b, &self.c, &self.d, &self.q]
            .iter()
            .all(|v| v.abs() < one)
    }

    fn abcd(&self) -> BigRational {
        &self.a * &self.b * &self.c * &self.d
    }

    /// Elementary symmetric polynomial e1 = a + b + c + d.
    fn e1(&self) -> BigRational {
        &self.a + &self.b + &self.c + &self.d
    }

    /// Elementary symmetric polynomial e3 = abc + abd + acd + bcd, the
    /// cleared form of abcd (1/a + 1/b + 1/c + 1/d).
    fn e3(&self) -> BigRational {
        &self.a * &self.b * &self.c
            + &self.a * &self.b * &self.d
            + &self.a * &self.c * &self.d
            + &self.b * &self.c * &self.d
    }
}

/// `x * q^m`, treating the product as a single entity: zero when x is zero
/// regardless of m, and requiring q != 0 only when a genuinely negative
/// power is applied to a nonzero factor.
fn qpow_times(q: &BigRational, m: i64, x: &BigRational) -> Result<BigRational> {
    if x.is_zero() {
        return Ok(BigRational::zero());
    }
    if m < 0 && q.is_zero() {
        return Err(Error::Degeneracy(format!(
            "q^({m}) with q = 0 in a recurrence coefficient"
        )));
    }
    Ok(rational_pow(q, m)? * x)
}

/// The parameter substitution onto the chain parameters:
/// `alpha = (1-q)/(1+ac+a+c)`, `gamma = -(1-q)ac/(1+ac+a+c)`, and the b/d
/// pair likewise for beta/delta.
pub fn forward_params(
    aw: &AwParams,
) -> Result<(BigRational, BigRational, BigRational, BigRational)> {
    let one = BigRational::one();
    let ac_den = &one + &aw.a * &aw.c + &aw.a + &aw.c;
    let bd_den = &one + &aw.b * &aw.d + &aw.b + &aw.d;
    if ac_den.is_zero() || bd_den.is_zero() {
        return Err(Error::Degeneracy(
            "vanishing denominator in the parameter substitution".into(),
        ));
    }
    let top = &one - &aw.q;
    let alpha = &top / &ac_den;
    let beta = &top / &bd_den;
    let gamma = -(&top * &aw.a * &aw.c) / &ac_den;
    let delta = -(&top * &aw.b * &aw.d) / &bd_den;
    Ok((alpha, beta, gamma, delta))
}

/// Result of inverting the substitution: exact when both discriminants are
/// rational squares, else dyadic approximations with the precision recorded
/// (absolute error below 2^-precision_bits per square root).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BackwardParams {
    Exact {
        a: BigRational,
        b: BigRational,
        c: BigRational,
        d: BigRational,
    },
    Approx {
        a: BigRational,
        b: BigRational,
        c: BigRational,
        d: BigRational,
        precision_bits: u32,
    },
}

impl BackwardParams {
    pub fn values(&self) -> (&BigRational, &BigRational, &BigRational, &BigRational) {
        match self {
            BackwardParams::Exact { a, b, c, d } | BackwardParams::Approx { a, b, c, d, .. } => {
                (a, b, c, d)
            }
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, BackwardParams::Exact { .. })
    }
}

/// Exact square root of a non-negative rational, if it is one.
fn exact_sqrt(x: &BigRational) -> Option<BigRational> {
    let num = x.numer();
    let den = x.denom();
    if num.is_negative() {
        return None;
    }
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

/// Round-to-nearest square root on the dyadic grid 2^-bits; the result is
/// within 2^-bits of the true value.
fn dyadic_sqrt(x: &BigRational, bits: u32) -> BigRational {
    // floor(2^(bits+2) sqrt(p/q)) = isqrt(4^(bits+2) p q) div q, then round
    // the two guard bits away.
    let p = x.numer();
    let q = x.denom();
    let scaled = (p * q) << (2 * (bits as usize + 2));
    let f = scaled.sqrt() / q;
    let m = (f + BigInt::from(2)) >> 2;
    BigRational::new(m, BigInt::one() << bits)
}

fn half_inversion(
    base: &BigRational,
    entry: &BigRational,
    scale: &BigRational,
    bits: u32,
) -> (BigRational, BigRational, bool) {
    let disc = base * base + BigRational::from(BigInt::from(4)) * entry;
    let (sqrt, exact) = match exact_sqrt(&disc) {
        Some(s) => (s, true),
        None => (dyadic_sqrt(&disc, bits), false),
    };
    let two_scale = BigRational::from(BigInt::from(2)) * scale;
    let plus = (base + &sqrt) / &two_scale;
    let minus = (base - &sqrt) / &two_scale;
    (plus, minus, exact)
}

/// Invert the substitution. Within each pair the first value takes the
/// positive square-root branch, so a >= c and b >= d as real numbers; the
/// downstream moments are symmetric in all four parameters, so the branch
/// choice is immaterial there.
pub fn backward_params(
    alpha: &BigRational,
    beta: &BigRational,
    gamma: &BigRational,
    delta: &BigRational,
    q: &BigRational,
    precision_bits: u32,
) -> Result<BackwardParams> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::Domain(
            "inversion requires alpha != 0 and beta != 0".into(),
        ));
    }
    let one = BigRational::one();
    let base_ac = &one - q - alpha + gamma;
    let base_bd = &one - q - beta + delta;
    for (base, entry) in [(&base_ac, alpha * gamma), (&base_bd, beta * delta)] {
        let disc = base * base + BigRational::from(BigInt::from(4)) * entry;
        if disc.is_negative() {
            return Err(Error::Domain(
                "negative discriminant: the inversion is complex".into(),
            ));
        }
    }
    let (a, c, exact_ac) = half_inversion(&base_ac, &(alpha * gamma), alpha, precision_bits);
    let (b, d, exact_bd) = half_inversion(&base_bd, &(beta * delta), beta, precision_bits);
    if exact_ac && exact_bd {
        Ok(BackwardParams::Exact { a, b, c, d })
    } else {
        Ok(BackwardParams::Approx {
            a,
            b,
            c,
            d,
            precision_bits,
        })
    }
}

/// The three-term recurrence coefficients at one level:
/// `A_n P_{n+1} + B_n P_n + C_n P_{n-1} = 2x P_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JacobiCoeffs {
    pub a_n: BigRational,
    pub b_n: BigRational,
    pub c_n: BigRational,
}

impl JacobiCoeffs {
    /// Diagonal of the monic recurrence: B_n / 2.
    pub fn monic_diagonal(&self) -> BigRational {
        &self.b_n / BigRational::from(BigInt::from(2))
    }
}

fn nonzero(x: BigRational, what: &str) -> Result<BigRational> {
    if x.is_zero() {
        Err(Error::Degeneracy(format!("vanishing factor {what}")))
    } else {
        Ok(x)
    }
}

/// `A_n = (1 - q^(n-1) abcd) / ((1 - q^(2n-1) abcd)(1 - q^(2n) abcd))`.
pub fn coefficient_a(n: usize, aw: &AwParams) -> Result<BigRational> {
    let n = n as i64;
    let one = BigRational::one();
    let q = &aw.q;
    let abcd = aw.abcd();
    let num = &one - qpow_times(q, n - 1, &abcd)?;
    let den = nonzero(
        (&one - qpow_times(q, 2 * n - 1, &abcd)?) * (&one - qpow_times(q, 2 * n, &abcd)?),
        "(1 - q^(2n-1) abcd)(1 - q^(2n) abcd)",
    )?;
    Ok(num / den)
}

/// `B_n = q^(n-1) [ (1 + q^(2n-1) abcd)(q e1 + e3)
///                  - q^(n-1) (1+q)(abcd e1 + q e3) ]
///        / ((1 - q^(2n-2) abcd)(1 - q^(2n) abcd))`,
/// with the reciprocal sums cleared to the elementary symmetric e3 so that
/// zero parameters are admissible. The bare q^(n-1) prefactor makes B_0
/// require q != 0.
pub fn coefficient_b(n: usize, aw: &AwParams) -> Result<BigRational> {
    let n = n as i64;
    let one = BigRational::one();
    let q = &aw.q;
    let abcd = aw.abcd();
    let e1 = aw.e1();
    let e3 = aw.e3();
    let den = nonzero(
        (&one - qpow_times(q, 2 * n - 2, &abcd)?) * (&one - qpow_times(q, 2 * n, &abcd)?),
        "(1 - q^(2n-2) abcd)(1 - q^(2n) abcd)",
    )?;
    let bracket = (&one + qpow_times(q, 2 * n - 1, &abcd)?) * (q * &e1 + &e3)
        - qpow_times(q, n - 1, &((&one + q) * (&abcd * &e1 + q * &e3)))?;
    Ok(qpow_times(q, n - 1, &bracket)? / den)
}

/// `C_n = (1 - q^n) prod_pairs (1 - q^(n-1) xy)
///        / ((1 - q^(2n-2) abcd)(1 - q^(2n-1) abcd))`
/// over the six parameter pairs xy.
pub fn coefficient_c(n: usize, aw: &AwParams) -> Result<BigRational> {
    let n = n as i64;
    let one = BigRational::one();
    let q = &aw.q;
    let abcd = aw.abcd();
    let den = nonzero(
        (&one - qpow_times(q, 2 * n - 2, &abcd)?) * (&one - qpow_times(q, 2 * n - 1, &abcd)?),
        "(1 - q^(2n-2) abcd)(1 - q^(2n-1) abcd)",
    )?;
    let mut num = &one - rational_pow(q, n)?;
    for pair in [
        &aw.a * &aw.b,
        &aw.a * &aw.c,
        &aw.a * &aw.d,
        &aw.b * &aw.c,
        &aw.b * &aw.d,
        &aw.c * &aw.d,
    ] {
        num *= &one - qpow_times(q, n - 1, &pair)?;
    }
    Ok(num / den)
}

/// All three recurrence coefficients at level n. Products of the form
/// `q^m abcd` are treated as entities (zero when abcd = 0, whatever m), so
/// zero parameters are admissible.
pub fn recurrence_coeffs(n: usize, aw: &AwParams) -> Result<JacobiCoeffs> {
    Ok(JacobiCoeffs {
        a_n: coefficient_a(n, aw)?,
        b_n: coefficient_b(n, aw)?,
        c_n: coefficient_c(n, aw)?,
    })
}

/// Off-diagonal product of the monic recurrence: `A_{n-1} C_n / 4` (n >= 1).
pub fn monic_offdiagonal(n: usize, aw: &AwParams) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Domain("off-diagonal starts at level 1".into()));
    }
    Ok(coefficient_a(n - 1, aw)? * coefficient_c(n, aw)? / BigRational::from(BigInt::from(4)))
}

/// Normalized moments nu_0..nu_K from the monic recurrence: nu_k is the
/// (0, 0) entry of the k-th power of the truncated tridiagonal operator,
/// i.e. a sum over weighted Motzkin paths. A (K+1)-level truncation is
/// exact because a length-k path from level 0 never exceeds level k.
pub fn moments_motzkin(k_max: usize, aw: &AwParams) -> Result<Vec<BigRational>> {
    let mut diag = Vec::with_capacity(k_max + 1);
    for n in 0..=k_max {
        diag.push(recurrence_coeffs(n, aw)?.monic_diagonal());
    }
    let mut off = vec![BigRational::zero()];
    for n in 1..=k_max {
        off.push(monic_offdiagonal(n, aw)?);
    }
    let mut state = vec![BigRational::zero(); k_max + 1];
    state[0] = BigRational::one();
    let mut out = vec![BigRational::one()];
    for _ in 1..=k_max {
        let mut next = vec![BigRational::zero(); k_max + 1];
        for (m, target) in next.iter_mut().enumerate() {
            let mut acc = BigRational::zero();
            if m > 0 {
                acc += &state[m - 1];
            }
            acc += &diag[m] * &state[m];
            if m < k_max {
                acc += &off[m + 1] * &state[m + 1];
            }
            *target = acc;
        }
        state = next;
        out.push(state[0].clone());
    }
    Ok(out)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The u = 1 partition-function polynomials Z_0..Z_K, shared across points.
pub fn z_polynomials(k_max: usize) -> Result<Vec<GfPoly>> {
    (0..=k_max).map(|l| tableaux::gf_total(l, false)).collect()
}

/// Evaluated partition functions Z_0..Z_K at the forward parameters (u = 1).
fn partition_values(k_max: usize, aw: &AwParams, zs: &[GfPoly]) -> Result<Vec<BigRational>> {
    let (alpha, beta, gamma, delta) = forward_params(aw)?;
    let point = [alpha, beta, gamma, delta, aw.q.clone(), BigRational::one()];
    Ok(zs[..=k_max].iter().map(|z| z.eval(&point)).collect())
}

/// Running products `prod_{i=0}^{l-1} (alpha beta - gamma delta q^i)` for
/// l = 0..=k_max; degenerate when any factor vanishes.
fn lambda_products(k_max: usize, aw: &AwParams) -> Result<Vec<BigRational>> {
    let (alpha, beta, gamma, delta) = forward_params(aw)?;
    let ab = &alpha * &beta;
    let gd = &gamma * &delta;
    let mut products = vec![BigRational::one()];
    let mut qpow = BigRational::one();
    for i in 0..k_max {
        let factor = &ab - &gd * &qpow;
        if factor.is_zero() {
            return Err(Error::Degeneracy(format!(
                "alpha beta = gamma delta q^{i}: the moment formula degenerates"
            )));
        }
        let prev = products.last().expect("nonempty").clone();
        products.push(prev * factor);
        qpow *= &aw.q;
    }
    Ok(products)
}

/// Normalized moments from the staircase formula:
/// `nu_k = sum_{l=0}^k (-1)^(k-l) C(k,l) ((1-q)/2)^l Z_l / prod_{i<l}
/// (alpha beta - gamma delta q^i)`, with Z_l evaluated at the forward
/// parameters and u = 1.
pub fn moments_staircase(k_max: usize, aw: &AwParams) -> Result<Vec<BigRational>> {
    let zs = z_polynomials(k_max)?;
    moments_staircase_with_z(k_max, aw, &zs)
}

/// As [`moments_staircase`], with precomputed Z polynomials.
pub fn moments_staircase_with_z(
    k_max: usize,
    aw: &AwParams,
    zs: &[GfPoly],
) -> Result<Vec<BigRational>> {
    if zs.len() <= k_max {
        return Err(Error::Domain(format!(
            "need Z_0..Z_{k_max}, got {} polynomials",
            zs.len()
        )));
    }
    let z_values = partition_values(k_max, aw, zs)?;
    let products = lambda_products(k_max, aw)?;
    let half_one_minus_q = (BigRational::one() - &aw.q) / BigRational::from(BigInt::from(2));
    let mut scaled = Vec::with_capacity(k_max + 1);
    let mut pow = BigRational::one();
    for l in 0..=k_max {
        scaled.push(&pow * &z_values[l] / &products[l]);
        pow *= &half_one_minus_q;
    }
    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mut acc = BigRational::zero();
        for (l, value) in scaled.iter().enumerate().take(k + 1) {
            let term = BigRational::from(binomial(k, l)) * value;
            if (k - l) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Side-by-side run of both pipelines, plus the binomial bridge
/// `((1-q)/2)^n Z_n / prod lambda_i = sum_k C(n,k) nu_k` for n <= K.
#[derive(Clone, Debug)]
pub struct MomentComparison {
    pub staircase: Vec<BigRational>,
    pub motzkin: Vec<BigRational>,
    pub equal: bool,
    pub bridge_ok: bool,
}

pub fn compare_moments(k_max: usize, aw: &AwParams) -> Result<MomentComparison> {
    let zs = z_polynomials(k_max)?;
    compare_moments_with_z(k_max, aw, &zs)
}

/// As [`compare_moments`], with precomputed Z polynomials.
pub fn compare_moments_with_z(
    k_max: usize,
    aw: &AwParams,
    zs: &[GfPoly],
) -> Result<MomentComparison> {
    let staircase = moments_staircase_with_z(k_max, aw, zs)?;
    let motzkin = moments_motzkin(k_max, aw)?;
    let equal = staircase == motzkin;

    let z_values = partition_values(k_max, aw, zs)?;
    let products = lambda_products(k_max, aw)?;
    let half_one_minus_q = (BigRational::one() - &aw.q) / BigRational::from(BigInt::from(2));
    let mut bridge_ok = true;
    let mut pow = BigRational::one();
    for n in 0..=k_max {
        let lhs = &pow * &z_values[n] / &products[n];
        let mut rhs = BigRational::zero();
        for (k, nu) in motzkin.iter().enumerate().take(n + 1) {
            rhs += BigRational::from(binomial(n, k)) * nu;
        }
        if lhs != rhs {
            bridge_ok = false;
        }
        pow *= &half_one_minus_q;
    }

    Ok(MomentComparison {
        staircase,
        motzkin,
        equal,
        bridge_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_rational;

    fn r(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn aw(a: &str, b: &str, c: &str, d: &str, q: &str) -> AwParams {
        AwParams::new(r(a), r(b), r(c), r(d), r(q))
    }

    fn generic() -> AwParams {
        aw("1/2", "1/3", "-1/5", "-1/7", "1/11")
    }

    #[test]
    fn forward_substitution() {
        let (alpha, beta, gamma, delta) = forward_params(&generic()).unwrap();
        assert_eq!(alpha, r("25/33"));
        assert_eq!(beta, r("35/44"));
        assert_eq!(gamma, r("5/66"));
        assert_eq!(delta, r("5/132"));
        // a = c = 0 collapses the left pair.
        let (alpha, _, gamma, _) = forward_params(&aw("0", "1/3", "0", "-1/7", "1/4")).unwrap();
        assert_eq!(alpha, r("3/4"));
        assert!(gamma.is_zero());
        let (_, beta, _, delta) = forward_params(&aw("1/2", "0", "-1/5", "0", "1/4")).unwrap();
        assert_eq!(beta, r("3/4"));
        assert!(delta.is_zero());
    }

    #[test]
    fn backward_roundtrip_is_exact_for_rationals() {
        // The discriminants of a forward image are perfect rational squares,
        // so the inversion is exact and returns the branch-ordered values.
        let p = generic();
        let (alpha, beta, gamma, delta) = forward_params(&p).unwrap();
        let back = backward_params(&alpha, &beta, &gamma, &delta, &p.q, 64).unwrap();
        assert!(back.is_exact());
        let (a, b, c, d) = back.values();
        assert_eq!((a, b, c, d), (&p.a, &p.b, &p.c, &p.d));
    }

    #[test]
    fn backward_degenerate_pair_maps_to_zero() {
        let q = r("1/4");
        let top = BigRational::one() - &q;
        let zero = BigRational::zero();
        let back = backward_params(&top, &top, &zero, &zero, &q, 64).unwrap();
        assert!(back.is_exact());
        let (a, b, c, d) = back.values();
        assert!(a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero());
    }

    #[test]
    fn backward_irrational_discriminant_is_approximated() {
        // alpha = gamma = 1, q = 0 gives discriminant 5.
        let one = BigRational::one();
        let back = backward_params(&one, &one, &one, &one, &BigRational::zero(), 48).unwrap();
        assert!(!back.is_exact());
        let (a, b, c, _) = back.values();
        // The branch sum is exact: a + c = (1 - q - alpha + gamma)/alpha = 1.
        assert_eq!(a + c, one);
        // a approximates the golden ratio: a^2 - a - 1 vanishes to ~2^-46.
        let err = (a * a - a - BigRational::one()).abs();
        assert!(err < r("1/100000000000"), "error {err}");
        assert_eq!(b, a);
    }

    #[test]
    fn recurrence_coefficients_level_zero() {
        // With abcd = 0 every q^(n-1) abcd entity vanishes, even at q = 0.
        let p = aw("0", "1/3", "-1/5", "-1/7", "0");
        assert_eq!(coefficient_a(0, &p).unwrap(), BigRational::one());
        // The bare q^(-1) prefactor leaves B_0 undefined at q = 0.
        assert!(coefficient_b(0, &p).is_err());
        // With abcd != 0 and q = 0 the entity q^(-1) abcd is undefined too.
        assert!(recurrence_coeffs(0, &aw("1/2", "1/3", "-1/5", "-1/7", "0")).is_err());
    }

    #[test]
    fn recurrence_matches_independent_transcription() {
        // Second transcription with the uncleared reciprocal sum
        // s' = 1/a + 1/b + 1/c + 1/d, usable because all parameters are
        // nonzero at this point.
        let p = generic();
        let q = &p.q;
        let abcd = p.abcd();
        let s = p.e1();
        let s_prime = p.a.recip() + p.b.recip() + p.c.recip() + p.d.recip();
        let one = BigRational::one();
        let qp = |m: i64| rational_pow(q, m).unwrap();
        for n in 0..=5i64 {
            let got = recurrence_coeffs(n as usize, &p).unwrap();
            let a_n = (&one - qp(n - 1) * &abcd)
                / ((&one - qp(2 * n - 1) * &abcd) * (&one - qp(2 * n) * &abcd));
            let b_n = qp(n - 1)
                * ((&one + qp(2 * n - 1) * &abcd) * (q * &s + &abcd * &s_prime)
                    - qp(n - 1) * (&one + q) * &abcd * (&s + q * &s_prime))
                / ((&one - qp(2 * n - 2) * &abcd) * (&one - qp(2 * n) * &abcd));
            let mut c_n = &one - qp(n);
            for pair in [
                &p.a * &p.b,
                &p.a * &p.c,
                &p.a * &p.d,
                &p.b * &p.c,
                &p.b * &p.d,
                &p.c * &p.d,
            ] {
                c_n *= &one - qp(n - 1) * pair;
            }
            c_n /= (&one - qp(2 * n - 2) * &abcd) * (&one - qp(2 * n - 1) * &abcd);
            assert_eq!(got.a_n, a_n, "A_{n}");
            assert_eq!(got.b_n, b_n, "B_{n}");
            assert_eq!(got.c_n, c_n, "C_{n}");
        }
    }

    #[test]
    fn motzkin_low_moments() {
        let p = generic();
        let nu = moments_motzkin(2, &p).unwrap();
        assert_eq!(nu[0], BigRational::one());
        let b0 = recurrence_coeffs(0, &p).unwrap().monic_diagonal();
        assert_eq!(nu[1], b0);
        assert_eq!(nu[2], &b0 * &b0 + monic_offdiagonal(1, &p).unwrap());
    }

    #[test]
    fn staircase_first_moment_in_closed_form() {
        let p = generic();
        let (alpha, beta, gamma, delta) = forward_params(&p).unwrap();
        let nu = moments_staircase(1, &p).unwrap();
        assert_eq!(nu[0], BigRational::one());
        let z1 = &alpha + &beta + &gamma + &delta;
        let expect = (BigRational::one() - &p.q) / BigRational::from(BigInt::from(2)) * z1
            / (&alpha * &beta - &gamma * &delta)
            - BigRational::one();
        assert_eq!(nu[1], expect);
    }

    #[test]
    fn pipelines_agree() {
        for p in [
            generic(),
            aw("1/3", "0", "-1/4", "0", "2/5"),
            aw("2/3", "1/4", "1/6", "-1/8", "1/9"),
        ] {
            let cmp = compare_moments(5, &p).unwrap();
            assert!(cmp.equal, "pipelines disagree at {p:?}");
            assert!(cmp.bridge_ok, "bridge fails at {p:?}");
        }
    }

    #[test]
    fn moments_are_symmetric_in_all_four_parameters() {
        let base = moments_motzkin(4, &generic()).unwrap();
        let permuted = [
            aw("1/3", "1/2", "-1/5", "-1/7", "1/11"),
            aw("-1/5", "-1/7", "1/2", "1/3", "1/11"),
            aw("-1/7", "1/2", "1/3", "-1/5", "1/11"),
        ];
        for p in permuted {
            assert_eq!(moments_motzkin(4, &p).unwrap(), base);
            assert_eq!(moments_staircase(4, &p).unwrap(), base);
        }
    }

    #[test]
    fn hankel_determinants_are_positive_in_the_orthogonality_regime() {
        let p = generic();
        assert!(p.in_orthogonality_regime());
        let nu = moments_motzkin(4, &p).unwrap();
        let h1 = nu[0].clone();
        let h2 = &nu[0] * &nu[2] - &nu[1] * &nu[1];
        let h3 = &nu[0] * (&nu[2] * &nu[4] - &nu[3] * &nu[3])
            - &nu[1] * (&nu[1] * &nu[4] - &nu[2] * &nu[3])
            + &nu[2] * (&nu[1] * &nu[3] - &nu[2] * &nu[2]);
        assert!(h1.is_positive() && h2.is_positive() && h3.is_positive());
    }

    #[test]
    fn degenerate_product_is_reported() {
        // abcd = 1 makes alpha beta = gamma delta, the excluded locus.
        let p = aw("2", "1/2", "3", "1/3", "1/5");
        assert!(matches!(moments_staircase(2, &p), Err(Error::Degeneracy(_))));
    }
}
