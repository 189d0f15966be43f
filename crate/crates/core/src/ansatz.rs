//! Four-index transfer matrices D and E, their word products, and symbolic
//! verification of the generalized matrix-ansatz identity families.
//!
//! Everything here works at u = 1 (the u-grading of any generating function
//! can be restored from homogeneity). Entries are recursively defined
//! polynomials; a word of letters contracts as
//! `(MN)_{i,j,k,l} = sum_{a,b} M_{i,a,k,b} N_{a,j,b,l}`, and the sums are
//! finite because a length-r word vanishes unless `a + b <= i + k + r`.
//! The boundary row vector selects (i, k) = (0, 0) and the boundary column
//! vector sums over all (j, l).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{GfPoly, Monomial, Var};
use crate::tableaux::StateWord;

/// Largest word length accepted by the verification sweeps.
pub const MAX_VERIFY_LEN: usize = 6;
/// Largest index bound accepted by the index-decrease sweep.
pub const MAX_VERIFY_INDEX: i64 = 10;

/// One letter of a transfer word: D marks an occupied site, E an empty one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    D,
    E,
}

impl Letter {
    fn to_char(self) -> char {
        match self {
            Letter::D => 'D',
            Letter::E => 'E',
        }
    }
}

/// A word over {D, E}; position s corresponds to lattice site s.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct AnsatzWord(Vec<Letter>);

impl AnsatzWord {
    pub fn new(letters: Vec<Letter>) -> AnsatzWord {
        AnsatzWord(letters)
    }

    pub fn empty() -> AnsatzWord {
        AnsatzWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// D for every occupied site, E for every empty one.
    pub fn from_type(word: &StateWord) -> AnsatzWord {
        AnsatzWord(
            word.bits()
                .iter()
                .map(|&b| if b { Letter::D } else { Letter::E })
                .collect(),
        )
    }

    /// The ASEP state this word spells (D -> occupied).
    pub fn type_word(&self) -> StateWord {
        StateWord::new(self.0.iter().map(|&l| l == Letter::D).collect())
    }

    /// All 2^len words of the given length, E before D at each position.
    pub fn all(len: usize) -> Vec<AnsatzWord> {
        (0..1usize << len)
            .map(|mask| {
                AnsatzWord(
                    (0..len)
                        .map(|s| {
                            if (mask >> (len - 1 - s)) & 1 == 1 {
                                Letter::D
                            } else {
                                Letter::E
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }

    fn concat(&self, tail: &[Letter]) -> Vec<Letter> {
        let mut out = self.0.clone();
        out.extend_from_slice(tail);
        out
    }
}

impl fmt::Display for AnsatzWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for AnsatzWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<AnsatzWord> {
        s.chars()
            .map(|c| match c {
                'D' => Ok(Letter::D),
                'E' => Ok(Letter::E),
                _ => Err(Error::Parse(format!("invalid transfer word `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(AnsatzWord)
    }
}

/// The constant family of the ansatz: 1 at n = 0, then ab - gd q^(n-1).
pub fn lambda(n: usize) -> GfPoly {
    if n == 0 {
        return GfPoly::one();
    }
    let ab = Monomial::var(Var::Alpha).mul(&Monomial::var(Var::Beta));
    let gdq = Monomial::var(Var::Gamma)
        .mul(&Monomial::var(Var::Delta))
        .mul_var(Var::Q, (n - 1) as u32);
    let mut p = GfPoly::from_monomial(ab, BigInt::one());
    p.add_term(gdq, -BigInt::one());
    p
}

type Idx = (i64, i64, i64, i64);

/// Memoized evaluator for letter entries and word entries.
///
/// Single-threaded by design: verification sweeps populate and reuse one
/// cache. Distinct caches may run on separate threads.
pub struct TransferCache {
    d: HashMap<Idx, GfPoly>,
    e: HashMap<Idx, GfPoly>,
    words: HashMap<(Vec<Letter>, Idx), GfPoly>,
}

impl Default for TransferCache {
    fn default() -> Self {
        Self::new()
    }
}

impl TransferCache {
    pub fn new() -> TransferCache {
        TransferCache {
            d: HashMap::new(),
            e: HashMap::new(),
            words: HashMap::new(),
        }
    }

    fn letter_poly(v: Var, qexp: i64) -> GfPoly {
        GfPoly::from_monomial(Monomial::var(v).mul_var(Var::Q, qexp as u32), BigInt::one())
    }

    /// The recursively defined entry of the letter matrix.
    ///
    /// Entries vanish when any index is negative, when j < i, or when
    /// l > k + 1. The D base cases are d*q^i at (i, i+1, 0, 0) and a*q^i at
    /// (i, i, 0, 1); otherwise
    /// `D = d (D + E)_{i,j-1,k-1,l} + D_{i,j,k-1,l-1}`. The E base cases are
    /// b*q^i at (i, i, 0, 0) and g*q^i at (i, i, 0, 1); otherwise
    /// `E = b (D + E)_{i,j,k-1,l} + q E_{i,j,k-1,l-1}`.
    pub fn entry(&mut self, letter: Letter, i: i64, j: i64, k: i64, l: i64) -> GfPoly {
        if i < 0 || j < 0 || k < 0 || l < 0 || j < i || l > k + 1 {
            return GfPoly::zero();
        }
        let key = (i, j, k, l);
        let memo = match letter {
            Letter::D => &self.d,
            Letter::E => &self.e,
        };
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        let result = match letter {
            Letter::D => {
                if i == j - 1 && k == 0 && l == 0 {
                    Self::letter_poly(Var::Delta, i)
                } else if i == j && k == 0 && l == 1 {
                    Self::letter_poly(Var::Alpha, i)
                } else {
                    let mut sum = self.entry(Letter::D, i, j - 1, k - 1, l);
                    sum.add_assign_ref(&self.entry(Letter::E, i, j - 1, k - 1, l));
                    let mut out = sum.mul_monomial(&Monomial::var(Var::Delta));
                    out.add_assign_ref(&self.entry(Letter::D, i, j, k - 1, l - 1));
                    out
                }
            }
            Letter::E => {
                if i == j && k == 0 && l == 0 {
                    Self::letter_poly(Var::Beta, i)
                } else if i == j && k == 0 && l == 1 {
                    Self::letter_poly(Var::Gamma, i)
                } else {
                    let mut sum = self.entry(Letter::D, i, j, k - 1, l);
                    sum.add_assign_ref(&self.entry(Letter::E, i, j, k - 1, l));
                    let mut out = sum.mul_monomial(&Monomial::var(Var::Beta));
                    out.add_assign_ref(
                        &self
                            .entry(Letter::E, i, j, k - 1, l - 1)
                            .mul_monomial(&Monomial::var(Var::Q)),
                    );
                    out
                }
            }
        };
        match letter {
            Letter::D => self.d.insert(key, result.clone()),
            Letter::E => self.e.insert(key, result.clone()),
        };
        result
    }

    /// Entry of the product of a non-empty word of letters.
    fn word_entry(&mut self, word: &[Letter], idx: Idx) -> GfPoly {
        let (i, j, k, l) = idx;
        if i < 0 || j < 0 || k < 0 || l < 0 || j < i {
            return GfPoly::zero();
        }
        let (&first, rest) = word.split_first().expect("word must be non-empty");
        if rest.is_empty() {
            return self.entry(first, i, j, k, l);
        }
        let key = (word.to_vec(), idx);
        if let Some(p) = self.words.get(&key) {
            return p.clone();
        }
        // First letter vanishes beyond a + b <= i + k + 1, and the remaining
        // word vanishes when its row index a exceeds j.
        let mut acc = GfPoly::zero();
        for a in i..=(i + k + 1).min(j) {
            for b in 0..=(k + 1).min(i + k + 1 - a) {
                let head = self.entry(first, i, a, k, b);
                if head.is_zero() {
                    continue;
                }
                let tail = self.word_entry(rest, (a, j, b, l));
                if tail.is_zero() {
                    continue;
                }
                acc.add_assign_ref(&head.mul_ref(&tail));
            }
        }
        self.words.insert(key, acc.clone());
        acc
    }

    /// `(WX)_{j,l}`: the word entry from boundary row (i, k) = (0, 0).
    /// The empty word is the boundary row itself: 1 at (0, 0).
    pub fn wx(&mut self, word: &AnsatzWord, j: i64, l: i64) -> GfPoly {
        if j < 0 || l < 0 {
            return GfPoly::zero();
        }
        if word.is_empty() {
            return if j == 0 && l == 0 {
                GfPoly::one()
            } else {
                GfPoly::zero()
            };
        }
        self.word_entry(word.letters(), (0, j, 0, l))
    }

    /// `WXV`: the type generating function of the word (all indices summed).
    pub fn wxv(&mut self, word: &AnsatzWord) -> GfPoly {
        if word.is_empty() {
            return GfPoly::one();
        }
        let r = word.len() as i64;
        let mut acc = GfPoly::zero();
        for j in 0..=r {
            for l in 0..=(r - j) {
                acc.add_assign_ref(&self.word_entry(word.letters(), (0, j, 0, l)));
            }
        }
        acc
    }

    fn wx_letters(&mut self, letters: &[Letter], j: i64, l: i64) -> GfPoly {
        if j < 0 || l < 0 {
            return GfPoly::zero();
        }
        if letters.is_empty() {
            return if j == 0 && l == 0 {
                GfPoly::one()
            } else {
                GfPoly::zero()
            };
        }
        self.word_entry(letters, (0, j, 0, l))
    }

    fn wxv_letters(&mut self, letters: &[Letter]) -> GfPoly {
        self.wxv(&AnsatzWord(letters.to_vec()))
    }
}

/// A materialized window of a word product: all entries with row indices
/// i, k up to `index_bound` (columns then range over the finite support).
#[derive(Clone, Debug)]
pub struct TransferTensor {
    word: AnsatzWord,
    index_bound: i64,
    entries: BTreeMap<Idx, GfPoly>,
}

impl TransferTensor {
    pub fn word(&self) -> &AnsatzWord {
        &self.word
    }

    pub fn index_bound(&self) -> i64 {
        self.index_bound
    }

    /// Stored (nonzero) entries in index order.
    pub fn entries(&self) -> impl Iterator<Item = (&Idx, &GfPoly)> {
        self.entries.iter()
    }

    pub fn entry(&self, i: i64, j: i64, k: i64, l: i64) -> GfPoly {
        self.entries
            .get(&(i, j, k, l))
            .cloned()
            .unwrap_or_else(GfPoly::zero)
    }
}

/// Materialize the product tensor of a word over a bounded index window.
pub fn word_tensor(
    cache: &mut TransferCache,
    word: &AnsatzWord,
    index_bound: i64,
) -> Result<TransferTensor> {
    if word.is_empty() {
        return Err(Error::Domain("word must be non-empty".into()));
    }
    let r = word.len() as i64;
    let mut entries = BTreeMap::new();
    for i in 0..=index_bound {
        for k in 0..=index_bound {
            for j in i..=(i + k + r) {
                for l in 0..=(i + k + r - j) {
                    let p = cache.word_entry(word.letters(), (i, j, k, l));
                    if !p.is_zero() {
                        entries.insert((i, j, k, l), p);
                    }
                }
            }
        }
    }
    Ok(TransferTensor {
        word: word.clone(),
        index_bound,
        entries,
    })
}

/// Z_n at u = 1 via the transfer route: contract n copies of D + E between
/// the boundary vectors.
pub fn partition_function(n: usize) -> GfPoly {
    let mut cache = TransferCache::new();
    let mut row: HashMap<(i64, i64), GfPoly> = HashMap::new();
    row.insert((0, 0), GfPoly::one());
    for _ in 0..n {
        let mut next: HashMap<(i64, i64), GfPoly> = HashMap::new();
        for ((a, b), poly) in &row {
            for j in *a..=(a + b + 1) {
                for l in 0..=(b + 1).min(a + b + 1 - j) {
                    let mut step = cache.entry(Letter::D, *a, j, *b, l);
                    step.add_assign_ref(&cache.entry(Letter::E, *a, j, *b, l));
                    if step.is_zero() {
                        continue;
                    }
                    next.entry((j, l))
                        .or_insert_with(GfPoly::zero)
                        .add_assign_ref(&poly.mul_ref(&step));
                }
            }
        }
        row = next;
    }
    let mut acc = GfPoly::zero();
    for poly in row.values() {
        acc.add_assign_ref(poly);
    }
    acc
}

/// Outcome of one verification sweep, serializable as the report JSON.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub family: String,
    pub max_len: usize,
    pub status: String,
    #[serde(rename = "X", skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(rename = "Y", skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

impl VerifyReport {
    fn ok(family: &str, max_len: usize) -> VerifyReport {
        VerifyReport {
            family: family.into(),
            max_len,
            status: "ok".into(),
            x: None,
            y: None,
            i: None,
            j: None,
            k: None,
            l: None,
            lhs: None,
            rhs: None,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == "ok"
    }
}

fn check_verify_len(max_len: usize) -> Result<()> {
    if max_len > MAX_VERIFY_LEN {
        return Err(Error::Capacity(format!(
            "verification sweeps support word lengths up to {MAX_VERIFY_LEN}, got {max_len}"
        )));
    }
    Ok(())
}

/// Family (I): `WX(DE - qED)YV = lambda_{|X|+|Y|+2} WX(D+E)YV` over all word
/// pairs with |X| + |Y| <= max_len.
pub fn verify_family_i(cache: &mut TransferCache, max_len: usize) -> Result<VerifyReport> {
    check_verify_len(max_len)?;
    let q = Monomial::var(Var::Q);
    for total in 0..=max_len {
        for x_len in 0..=total {
            let y_len = total - x_len;
            for x in AnsatzWord::all(x_len) {
                for y in AnsatzWord::all(y_len) {
                    let de = {
                        let mut w = x.concat(&[Letter::D, Letter::E]);
                        w.extend_from_slice(y.letters());
                        w
                    };
                    let ed = {
                        let mut w = x.concat(&[Letter::E, Letter::D]);
                        w.extend_from_slice(y.letters());
                        w
                    };
                    let dd = {
                        let mut w = x.concat(&[Letter::D]);
                        w.extend_from_slice(y.letters());
                        w
                    };
                    let ee = {
                        let mut w = x.concat(&[Letter::E]);
                        w.extend_from_slice(y.letters());
                        w
                    };
                    let lhs =
                        &cache.wxv_letters(&de) - &cache.wxv_letters(&ed).mul_monomial(&q);
                    let sum = &cache.wxv_letters(&dd) + &cache.wxv_letters(&ee);
                    let rhs = lambda(total + 2).mul_ref(&sum);
                    if lhs != rhs {
                        return Ok(VerifyReport {
                            x: Some(x.to_string()),
                            y: Some(y.to_string()),
                            lhs: Some(lhs.to_text()),
                            rhs: Some(rhs.to_text()),
                            status: "fail".into(),
                            ..VerifyReport::ok("I", max_len)
                        });
                    }
                }
            }
        }
    }
    Ok(VerifyReport::ok("I", max_len))
}

/// Family (II): `b WXDV - d WXEV = lambda_{|X|+1} WXV` for |X| <= max_len.
pub fn verify_family_ii(cache: &mut TransferCache, max_len: usize) -> Result<VerifyReport> {
    check_verify_len(max_len)?;
    let beta = Monomial::var(Var::Beta);
    let delta = Monomial::var(Var::Delta);
    for x_len in 0..=max_len {
        for x in AnsatzWord::all(x_len) {
            let xd = x.concat(&[Letter::D]);
            let xe = x.concat(&[Letter::E]);
            let lhs = &cache.wxv_letters(&xd).mul_monomial(&beta)
                - &cache.wxv_letters(&xe).mul_monomial(&delta);
            let rhs = lambda(x_len + 1).mul_ref(&cache.wxv(&x));
            if lhs != rhs {
                return Ok(VerifyReport {
                    x: Some(x.to_string()),
                    lhs: Some(lhs.to_text()),
                    rhs: Some(rhs.to_text()),
                    status: "fail".into(),
                    ..VerifyReport::ok("II", max_len)
                });
            }
        }
    }
    Ok(VerifyReport::ok("II", max_len))
}

/// Family (III): `a WEYV - g WDYV = lambda_{|Y|+1} WYV` for |Y| <= max_len.
pub fn verify_family_iii(cache: &mut TransferCache, max_len: usize) -> Result<VerifyReport> {
    check_verify_len(max_len)?;
    let alpha = Monomial::var(Var::Alpha);
    let gamma = Monomial::var(Var::Gamma);
    for y_len in 0..=max_len {
        for y in AnsatzWord::all(y_len) {
            let ey: Vec<Letter> = [Letter::E]
                .iter()
                .chain(y.letters())
                .copied()
                .collect();
            let dy: Vec<Letter> = [Letter::D]
                .iter()
                .chain(y.letters())
                .copied()
                .collect();
            let lhs = &cache.wxv_letters(&ey).mul_monomial(&alpha)
                - &cache.wxv_letters(&dy).mul_monomial(&gamma);
            let rhs = lambda(y_len + 1).mul_ref(&cache.wxv(&y));
            if lhs != rhs {
                return Ok(VerifyReport {
                    y: Some(y.to_string()),
                    lhs: Some(lhs.to_text()),
                    rhs: Some(rhs.to_text()),
                    status: "fail".into(),
                    ..VerifyReport::ok("III", max_len)
                });
            }
        }
    }
    Ok(VerifyReport::ok("III", max_len))
}

/// Run families (I), (II), (III) and return the three reports.
pub fn verify_gma(max_len: usize) -> Result<Vec<VerifyReport>> {
    let mut cache = TransferCache::new();
    Ok(vec![
        verify_family_i(&mut cache, max_len)?,
        verify_family_ii(&mut cache, max_len)?,
        verify_family_iii(&mut cache, max_len)?,
    ])
}

/// Index decrease: `Y_{i,j,k,l} = q^{|Y|} Y_{i-1,j-1,k,l}` for every word Y
/// with 1 <= |Y| <= max_len and all indices up to max_index with i >= 1.
pub fn verify_decrease(max_len: usize, max_index: i64) -> Result<VerifyReport> {
    check_verify_len(max_len)?;
    if max_index > MAX_VERIFY_INDEX {
        return Err(Error::Capacity(format!(
            "index-decrease sweep supports indices up to {MAX_VERIFY_INDEX}, got {max_index}"
        )));
    }
    let mut cache = TransferCache::new();
    for len in 1..=max_len {
        let q_pow = Monomial::one().mul_var(Var::Q, len as u32);
        for word in AnsatzWord::all(len) {
            for i in 1..=max_index {
                for j in 0..=max_index {
                    for k in 0..=max_index {
                        for l in 0..=max_index {
                            let lhs = cache.word_entry(word.letters(), (i, j, k, l));
                            let rhs = cache
                                .word_entry(word.letters(), (i - 1, j - 1, k, l))
                                .mul_monomial(&q_pow);
                            if lhs != rhs {
                                return Ok(VerifyReport {
                                    y: Some(word.to_string()),
                                    i: Some(i),
                                    j: Some(j),
                                    k: Some(k),
                                    l: Some(l),
                                    lhs: Some(lhs.to_text()),
                                    rhs: Some(rhs.to_text()),
                                    status: "fail".into(),
                                    ..VerifyReport::ok("decrease", max_len)
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(VerifyReport::ok("decrease", max_len))
}

/// The two row-level identity families behind (I) and (II), checked for all
/// words |X| <= max_len and all (j, l) in (and one step beyond) the support:
///
/// 1. `(WXDE)_{j,l} = q (WXED)_{j,l} + ab (WX(D+E))_{j,l}
///     - gd q^{|X|+1} (WX(D+E))_{j-1,l}`
/// 2. `b (WXD)_{j,l} = d (WXE)_{j-1,l} + ab (WX)_{j,l-1}
///     - gd q^{|X|} (WX)_{j-1,l-1}`
pub fn verify_identities(max_len: usize) -> Result<Vec<VerifyReport>> {
    check_verify_len(max_len)?;
    let mut cache = TransferCache::new();
    let q = Monomial::var(Var::Q);
    let ab = Monomial::var(Var::Alpha).mul(&Monomial::var(Var::Beta));
    let beta = Monomial::var(Var::Beta);
    let delta = Monomial::var(Var::Delta);
    let mut reports = Vec::new();

    'id1: for x_len in 0..=max_len {
        let gdq = Monomial::var(Var::Gamma)
            .mul(&Monomial::var(Var::Delta))
            .mul_var(Var::Q, (x_len + 1) as u32);
        for x in AnsatzWord::all(x_len) {
            let xde = x.concat(&[Letter::D, Letter::E]);
            let xed = x.concat(&[Letter::E, Letter::D]);
            let xd = x.concat(&[Letter::D]);
            let xe = x.concat(&[Letter::E]);
            let bound = (x_len + 3) as i64;
            for j in 0..=bound {
                for l in 0..=bound {
                    let lhs = cache.wx_letters(&xde, j, l);
                    let mut rhs = cache.wx_letters(&xed, j, l).mul_monomial(&q);
                    let sum_jl = &cache.wx_letters(&xd, j, l) + &cache.wx_letters(&xe, j, l);
                    rhs.add_assign_ref(&sum_jl.mul_monomial(&ab));
                    let sum_prev =
                        &cache.wx_letters(&xd, j - 1, l) + &cache.wx_letters(&xe, j - 1, l);
                    rhs.sub_assign_ref(&sum_prev.mul_monomial(&gdq));
                    if lhs != rhs {
                        reports.push(VerifyReport {
                            x: Some(x.to_string()),
                            j: Some(j),
                            l: Some(l),
                            lhs: Some(lhs.to_text()),
                            rhs: Some(rhs.to_text()),
                            status: "fail".into(),
                            ..VerifyReport::ok("id1", max_len)
                        });
                        break 'id1;
                    }
                }
            }
        }
    }
    if reports.is_empty() {
        reports.push(VerifyReport::ok("id1", max_len));
    }

    'id2: for x_len in 0..=max_len {
        let gdq = Monomial::var(Var::Gamma)
            .mul(&Monomial::var(Var::Delta))
            .mul_var(Var::Q, x_len as u32);
        for x in AnsatzWord::all(x_len) {
            let xd = x.concat(&[Letter::D]);
            let xe = x.concat(&[Letter::E]);
            let bound = (x_len + 3) as i64;
            for j in 0..=bound {
                for l in 0..=bound {
                    let lhs = cache.wx_letters(&xd, j, l).mul_monomial(&beta);
                    let mut rhs = cache.wx_letters(&xe, j - 1, l).mul_monomial(&delta);
                    rhs.add_assign_ref(&cache.wx(&x, j, l - 1).mul_monomial(&ab));
                    rhs.sub_assign_ref(&cache.wx(&x, j - 1, l - 1).mul_monomial(&gdq));
                    if lhs != rhs {
                        reports.push(VerifyReport {
                            x: Some(x.to_string()),
                            j: Some(j),
                            l: Some(l),
                            lhs: Some(lhs.to_text()),
                            rhs: Some(rhs.to_text()),
                            status: "fail".into(),
                            ..VerifyReport::ok("id2", max_len)
                        });
                        break 'id2;
                    }
                }
            }
        }
    }
    if reports.len() < 2 {
        reports.push(VerifyReport::ok("id2", max_len));
    }

    Ok(reports)
}
