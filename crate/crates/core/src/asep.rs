//! The discrete-time open-boundary ASEP chain: exact stationary
//! distributions via two independent routes (rational linear algebra on the
//! transition matrix, and evaluated tableaux generating functions), physical
//! quantities, and the three boundary-symmetry identities.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{rational_pow, GfPoly, Var, NVARS};
use crate::tableaux::{self, StateWord};

/// Largest lattice size accepted by the dense exact solver.
pub const MAX_CHAIN_N: usize = 10;

/// The six chain parameters. Chain construction requires each in [0, 1];
/// symbolic and generating-function operations accept arbitrary values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AsepParams {
    pub alpha: BigRational,
    pub beta: BigRational,
    pub gamma: BigRational,
    pub delta: BigRational,
    pub q: BigRational,
    pub u: BigRational,
}

impl AsepParams {
    pub fn new(
        alpha: BigRational,
        beta: BigRational,
        gamma: BigRational,
        delta: BigRational,
        q: BigRational,
        u: BigRational,
    ) -> AsepParams {
        AsepParams {
            alpha,
            beta,
            gamma,
            delta,
            q,
            u,
        }
    }

    /// The evaluation point in the fixed variable order (a, b, g, d, q, u).
    pub fn point(&self) -> [BigRational; NVARS] {
        [
            self.alpha.clone(),
            self.beta.clone(),
            self.gamma.clone(),
            self.delta.clone(),
            self.q.clone(),
            self.u.clone(),
        ]
    }

    fn check_probabilities(&self) -> Result<()> {
        let one = BigRational::one();
        for (name, v) in [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
            ("delta", &self.delta),
            ("q", &self.q),
            ("u", &self.u),
        ] {
            if v.is_negative() || *v > one {
                return Err(Error::Domain(format!(
                    "chain parameter {name} = {v} outside [0, 1]"
                )));
            }
        }
        Ok(())
    }
}

/// The transition matrix on all 2^n occupation words, stored sparsely per
/// row (self-loop included). Every row sums to exactly 1.
#[derive(Clone, Debug)]
pub struct AsepChain {
    n: usize,
    /// rows[s] = sorted (target, probability) pairs with positive entries.
    rows: Vec<Vec<(usize, BigRational)>>,
}

impl AsepChain {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_states(&self) -> usize {
        1 << self.n
    }

    /// Transition probability between two words.
    pub fn probability(&self, from: &StateWord, to: &StateWord) -> BigRational {
        let t = to.to_index();
        self.rows[from.to_index()]
            .iter()
            .find(|(j, _)| *j == t)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// All positive transitions as (from, to, probability), row by row.
    pub fn transitions(&self) -> Vec<(StateWord, StateWord, BigRational)> {
        let mut out = Vec::new();
        for (s, row) in self.rows.iter().enumerate() {
            for (t, p) in row {
                out.push((
                    StateWord::from_index(self.n, s),
                    StateWord::from_index(self.n, *t),
                    p.clone(),
                ));
            }
        }
        out
    }
}

/// Build the chain: per step, a particle enters on the left with rate
/// alpha/(n+1) and on the right with delta/(n+1), exits right with
/// beta/(n+1) and left with gamma/(n+1), hops right with u/(n+1) and left
/// with q/(n+1); the self-loop absorbs the remainder.
pub fn build_chain(n: usize, params: &AsepParams) -> Result<AsepChain> {
    if n == 0 || n > MAX_CHAIN_N {
        return Err(Error::Capacity(format!(
            "chain construction supports sizes 1..={MAX_CHAIN_N}, got {n}"
        )));
    }
    params.check_probabilities()?;
    let scale = BigRational::from_integer((n as i64 + 1).into());
    let m = 1usize << n;
    // Site i (1-based, leftmost = 1) lives at index bit n - i.
    let site_bit = |site: usize| 1usize << (n - site);
    let mut rows = Vec::with_capacity(m);
    for s in 0..m {
        let occupied = |site: usize| s & site_bit(site) != 0;
        let mut off: BTreeMap<usize, BigRational> = BTreeMap::new();
        let mut add = |target: usize, rate: &BigRational| {
            if !rate.is_zero() {
                *off.entry(target).or_insert_with(BigRational::zero) += rate / &scale;
            }
        };
        for site in 1..n {
            if occupied(site) && !occupied(site + 1) {
                add(s ^ site_bit(site) ^ site_bit(site + 1), &params.u);
            }
            if !occupied(site) && occupied(site + 1) {
                add(s ^ site_bit(site) ^ site_bit(site + 1), &params.q);
            }
        }
        if !occupied(1) {
            add(s | site_bit(1), &params.alpha);
        } else {
            add(s & !site_bit(1), &params.gamma);
        }
        if occupied(n) {
            add(s & !site_bit(n), &params.beta);
        } else {
            add(s | site_bit(n), &params.delta);
        }
        let total: BigRational = off.values().sum();
        let stay = BigRational::one() - total;
        debug_assert!(!stay.is_negative());
        let mut row: Vec<(usize, BigRational)> = off.into_iter().collect();
        if !stay.is_zero() {
            row.push((s, stay));
            row.sort_by_key(|(t, _)| *t);
        }
        rows.push(row);
    }
    Ok(AsepChain { n, rows })
}

/// A stationary distribution: exact probabilities per occupation word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StationaryDist {
    n: usize,
    probs: BTreeMap<StateWord, BigRational>,
}

impl StationaryDist {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, word: &StateWord) -> &BigRational {
        &self.probs[word]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&StateWord, &BigRational)> {
        self.probs.iter()
    }

    /// Stationary average of an observable.
    pub fn average(&self, f: impl Fn(&StateWord) -> BigRational) -> BigRational {
        self.probs.iter().map(|(w, p)| f(w) * p).sum()
    }
}

fn strongly_connected(rows: &[Vec<(usize, BigRational)>]) -> bool {
    let m = rows.len();
    let mut forward = vec![Vec::new(); m];
    let mut backward = vec![Vec::new(); m];
    for (s, row) in rows.iter().enumerate() {
        for (t, p) in row {
            if *t != s && !p.is_zero() {
                forward[s].push(*t);
                backward[*t].push(s);
            }
        }
    }
    let reach = |adj: &[Vec<usize>]| {
        let mut seen = vec![false; m];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&b| b)
    };
    reach(&forward) && reach(&backward)
}

/// Solve for the unique stationary distribution by exact Gaussian
/// elimination on the transposed-and-shifted transition matrix, with the
/// normalization row forcing the entries to sum to 1. Partial pivoting
/// chooses the largest entry by rational magnitude.
#[allow(clippy::needless_range_loop)]
pub fn stationary_exact(chain: &AsepChain) -> Result<StationaryDist> {
    let m = chain.num_states();
    if !strongly_connected(&chain.rows) {
        return Err(Error::Degeneracy(
            "chain is reducible: stationary distribution is not unique".into(),
        ));
    }
    // a[r][c] = P(c -> r) - [r == c], last row replaced by the sum constraint.
    let mut a = vec![vec![BigRational::zero(); m + 1]; m];
    for (c, row) in chain.rows.iter().enumerate() {
        for (r, p) in row {
            a[*r][c] += p;
        }
    }
    for r in 0..m {
        a[r][r] -= BigRational::one();
    }
    for c in 0..=m {
        a[m - 1][c] = BigRational::one();
    }
    for col in 0..m {
        let pivot = (col..m)
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()))
            .ok_or_else(|| Error::Degeneracy("singular stationary system".into()))?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for c in col..=m {
            a[col][c] *= &inv;
        }
        for r in 0..m {
            if r != col && !a[r][col].is_zero() {
                let factor = std::mem::replace(&mut a[r][col], BigRational::zero());
                for c in (col + 1)..=m {
                    let delta = &a[col][c] * &factor;
                    a[r][c] -= delta;
                }
            }
        }
    }
    let probs: BTreeMap<StateWord, BigRational> = (0..m)
        .map(|s| (StateWord::from_index(chain.n, s), a[s][m].clone()))
        .collect();
    // The solution is a genuine distribution and a fixed point; both checks
    // are cheap relative to the elimination.
    let total: BigRational = probs.values().sum();
    if total != BigRational::one() || probs.values().any(|p| p.is_negative()) {
        return Err(Error::Degeneracy("stationary solve left the simplex".into()));
    }
    for (t, want) in probs.iter() {
        let mut got = BigRational::zero();
        for (s, p) in probs.iter() {
            let step = chain.probability(s, t);
            if !step.is_zero() {
                got += p * step;
            }
        }
        if got != *want {
            return Err(Error::Degeneracy("solution is not a fixed point".into()));
        }
    }
    Ok(StationaryDist { n: chain.n, probs })
}

/// Stationary distribution from tableaux: the per-type generating function
/// evaluated at the parameters, normalized by the partition function.
pub fn stationary_tableaux(n: usize, params: &AsepParams) -> Result<StationaryDist> {
    let point = params.point();
    let gfs = tableaux::gf_all_types(n)?;
    let mut values: BTreeMap<StateWord, BigRational> = BTreeMap::new();
    let mut z = BigRational::zero();
    for (word, gf) in gfs {
        let v = gf.eval(&point);
        z += &v;
        values.insert(word, v);
    }
    if z.is_zero() {
        return Err(Error::Degeneracy("partition function vanishes".into()));
    }
    let probs = values.into_iter().map(|(w, v)| (w, v / &z)).collect();
    Ok(StationaryDist { n, probs })
}

/// Evaluate Z_n at the parameters.
pub fn partition_value(n: usize, params: &AsepParams) -> Result<BigRational> {
    Ok(tableaux::gf_total(n, true)?.eval(&params.point()))
}

/// The steady-state current in closed form:
/// `Z_{n-1} (ab - gd q^(n-1)) / Z_n` evaluated at the parameters.
pub fn current(n: usize, params: &AsepParams) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Domain("current requires n >= 1".into()));
    }
    let z_prev = partition_value(n - 1, params)?;
    let z = partition_value(n, params)?;
    if z.is_zero() {
        return Err(Error::Degeneracy("partition function vanishes".into()));
    }
    let factor =
        &params.alpha * &params.beta - &params.gamma * &params.delta * rational_pow(&params.q, n as i64 - 1)?;
    Ok(z_prev * factor / z)
}

/// The current as an unreduced symbolic pair
/// `(Z_{n-1} (ab - gd q^(n-1)), Z_n)`.
pub fn current_symbolic(n: usize) -> Result<(GfPoly, GfPoly)> {
    if n == 0 {
        return Err(Error::Domain("current requires n >= 1".into()));
    }
    let numerator = tableaux::gf_total(n - 1, true)?.mul_ref(&crate::ansatz::lambda(n));
    Ok((numerator, tableaux::gf_total(n, true)?))
}

/// The definitional bond average `<t_i (1 - t_{i+1}) - q (1 - t_i) t_{i+1}>`
/// computed from the exact solver's stationary distribution. Agrees with the
/// closed form at u = 1.
pub fn current_definitional(n: usize, bond: usize, params: &AsepParams) -> Result<BigRational> {
    if n < 2 || bond == 0 || bond >= n {
        return Err(Error::Domain(format!(
            "bond {bond} outside 1..={} for n = {n}",
            n.saturating_sub(1)
        )));
    }
    let dist = stationary_exact(&build_chain(n, params)?)?;
    let mut acc = BigRational::zero();
    for (word, p) in dist.iter() {
        if word.bit(bond - 1) && !word.bit(bond) {
            acc += p;
        } else if !word.bit(bond - 1) && word.bit(bond) {
            acc -= &params.q * p;
        }
    }
    Ok(acc)
}

/// The m-point function: the probability that all the given 1-based sites
/// are occupied, as the evaluated bullet-constrained generating function
/// over Z_n.
pub fn m_point(n: usize, positions: &[usize], params: &AsepParams) -> Result<BigRational> {
    let point = params.point();
    let z = tableaux::gf_total(n, true)?.eval(&point);
    if z.is_zero() {
        return Err(Error::Degeneracy("partition function vanishes".into()));
    }
    Ok(tableaux::gf_with_bullets_at(n, positions)?.eval(&point) / z)
}

/// Outcome of the symmetry check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmetryCheck {
    Ok { n: usize },
    Fail { identity: &'static str, word: StateWord },
}

impl SymmetryCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, SymmetryCheck::Ok { .. })
    }
}

/// Verify the three boundary symmetries as exact polynomial identities in
/// all six variables, reporting the first failing word if any:
///
/// - reversal:    gf(t) = gf(reverse t) under a<->d, b<->g, u<->q;
/// - relabeling:  gf(t) = gf(complement t) under a<->g, b<->d, u<->q;
/// - composition: gf(t) = gf(reversed complement) under a<->b, g<->d.
pub fn check_symmetries(n: usize) -> Result<SymmetryCheck> {
    let gfs = tableaux::gf_all_types(n)?;
    for (word, gf) in &gfs {
        let reversal = gfs[&word.reversed()].swap_vars(&[
            (Var::Alpha, Var::Delta),
            (Var::Beta, Var::Gamma),
            (Var::U, Var::Q),
        ]);
        if *gf != reversal {
            return Ok(SymmetryCheck::Fail {
                identity: "reversal",
                word: word.clone(),
            });
        }
        let relabeling = gfs[&word.complement()].swap_vars(&[
            (Var::Alpha, Var::Gamma),
            (Var::Beta, Var::Delta),
            (Var::U, Var::Q),
        ]);
        if *gf != relabeling {
            return Ok(SymmetryCheck::Fail {
                identity: "relabeling",
                word: word.clone(),
            });
        }
        let composition = gfs[&word.reversed().complement()]
            .swap_vars(&[(Var::Alpha, Var::Beta), (Var::Gamma, Var::Delta)]);
        if *gf != composition {
            return Ok(SymmetryCheck::Fail {
                identity: "composition",
                word: word.clone(),
            });
        }
    }
    Ok(SymmetryCheck::Ok { n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_rational;

    fn r(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn params(alpha: &str, beta: &str, gamma: &str, delta: &str, q: &str, u: &str) -> AsepParams {
        AsepParams::new(r(alpha), r(beta), r(gamma), r(delta), r(q), r(u))
    }

    fn generic_point() -> AsepParams {
        params("1/2", "1/3", "1/5", "1/7", "1/11", "1")
    }

    #[test]
    fn single_site_entry_rate_merges() {
        let chain = build_chain(1, &generic_point()).unwrap();
        let empty: StateWord = "0".parse().unwrap();
        let full: StateWord = "1".parse().unwrap();
        // Enter from either side on one site: (alpha + delta) / 2.
        assert_eq!(chain.probability(&empty, &full), r("9/28"));
        assert_eq!(chain.probability(&full, &empty), r("4/15"));
    }

    #[test]
    fn rows_sum_to_one() {
        for n in 1..=4 {
            let chain = build_chain(n, &generic_point()).unwrap();
            for row in &chain.rows {
                let total: BigRational = row.iter().map(|(_, p)| p.clone()).sum();
                assert_eq!(total, BigRational::one());
            }
        }
    }

    #[test]
    fn two_site_transition_structure() {
        let chain = build_chain(2, &generic_point()).unwrap();
        let p = |from: &str, to: &str| {
            chain.probability(&from.parse().unwrap(), &to.parse().unwrap())
        };
        let third = r("1/3");
        assert_eq!(p("00", "10"), r("1/2") * &third); // enter left
        assert_eq!(p("00", "01"), r("1/7") * &third); // enter right
        assert_eq!(p("10", "01"), r("1") * &third); // hop right
        assert_eq!(p("01", "10"), r("1/11") * &third); // hop left
        assert_eq!(p("01", "00"), r("1/3") * &third); // exit right
        assert_eq!(p("10", "00"), r("1/5") * &third); // exit left
        assert_eq!(p("10", "11"), r("1/7") * &third);
        assert_eq!(p("01", "11"), r("1/2") * &third);
        assert_eq!(p("11", "01"), r("1/5") * &third);
        assert_eq!(p("11", "10"), r("1/3") * &third);
        // No direct 00 <-> 11 transitions.
        assert!(p("00", "11").is_zero());
        assert!(p("11", "00").is_zero());
    }

    #[test]
    fn chain_parameter_domain() {
        assert!(matches!(
            build_chain(2, &params("3/2", "1/3", "1/5", "1/7", "0", "1")),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            build_chain(0, &generic_point()),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn reducible_chain_is_rejected() {
        // No entries at all: the empty word is absorbing.
        let frozen = params("0", "1", "0", "0", "0", "1");
        let chain = build_chain(2, &frozen).unwrap();
        assert!(matches!(
            stationary_exact(&chain),
            Err(Error::Degeneracy(_))
        ));
    }

    #[test]
    fn single_site_balance() {
        let p = generic_point();
        let dist = stationary_exact(&build_chain(1, &p).unwrap()).unwrap();
        let ratio = dist.get(&"1".parse().unwrap()) / dist.get(&"0".parse().unwrap());
        assert_eq!(
            ratio,
            (&p.alpha + &p.delta) / (&p.beta + &p.gamma)
        );
        let tb = stationary_tableaux(1, &p).unwrap();
        assert_eq!(
            *tb.get(&"1".parse().unwrap()),
            (&p.alpha + &p.delta) / (&p.alpha + &p.beta + &p.gamma + &p.delta)
        );
    }

    #[test]
    fn two_routes_agree() {
        for n in 1..=4 {
            let p = generic_point();
            let solver = stationary_exact(&build_chain(n, &p).unwrap()).unwrap();
            let tableaux_dist = stationary_tableaux(n, &p).unwrap();
            assert_eq!(solver, tableaux_dist, "n = {n}");
        }
    }

    #[test]
    fn uniform_parameters_have_reversal_complement_invariance() {
        let p = params("1/3", "1/3", "1/3", "1/3", "1/2", "1/2");
        let dist = stationary_exact(&build_chain(3, &p).unwrap()).unwrap();
        for (word, prob) in dist.iter() {
            assert_eq!(prob, dist.get(&word.reversed().complement()));
        }
    }

    #[test]
    fn current_closed_form_single_site() {
        let p = generic_point();
        let j = current(1, &p).unwrap();
        let expect = (&p.alpha * &p.beta - &p.gamma * &p.delta)
            / (&p.alpha + &p.beta + &p.gamma + &p.delta);
        assert_eq!(j, expect);
    }

    #[test]
    fn current_matches_definitional_average() {
        let p = generic_point();
        for n in 2..=4 {
            let closed = current(n, &p).unwrap();
            for bond in 1..n {
                assert_eq!(
                    current_definitional(n, bond, &p).unwrap(),
                    closed,
                    "n = {n}, bond = {bond}"
                );
            }
        }
        assert!(current_definitional(3, 3, &generic_point()).is_err());
    }

    #[test]
    fn current_symbolic_is_unreduced_pair() {
        let (num, den) = current_symbolic(1).unwrap();
        assert_eq!(num, crate::ansatz::lambda(1));
        assert_eq!(den.to_text(), "a + b + g + d");
    }

    #[test]
    fn m_point_examples() {
        let p = generic_point();
        assert_eq!(m_point(2, &[], &p).unwrap(), BigRational::one());
        assert_eq!(
            m_point(1, &[1], &p).unwrap(),
            (&p.alpha + &p.delta) / (&p.alpha + &p.beta + &p.gamma + &p.delta)
        );
        let dist = stationary_tableaux(2, &p).unwrap();
        assert_eq!(
            m_point(2, &[1, 2], &p).unwrap(),
            *dist.get(&"11".parse().unwrap())
        );
        assert!(m_point(2, &[3], &p).is_err());
    }

    #[test]
    fn symmetries_hold_symbolically() {
        for n in 1..=3 {
            assert!(check_symmetries(n).unwrap().is_ok(), "n = {n}");
        }
    }
}
