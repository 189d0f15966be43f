//! Staircase tableaux: validity, type, q/u filling, weights, exhaustive
//! enumeration, and weight generating functions.
//!
//! A tableau of size n is a staircase grid: row r (1-based, top to bottom)
//! has n+1-r cells, and the last cell of each row is its diagonal cell. Row 1
//! holds the northeast end of the diagonal. Cells are empty or labeled with
//! one of the four boundary letters, subject to: no diagonal cell is empty;
//! everything left of a b/d in its row is empty; everything above an a/g in
//! its column is empty.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactmath::{GfPoly, Monomial, Var};

/// Largest size supported by exhaustive enumeration (4^n n! growth).
pub const MAX_ENUM_N: usize = 7;
/// Largest size served by the transfer-matrix route for generating functions.
pub const MAX_TRANSFER_N: usize = 16;

/// Content of a single staircase cell.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CellLabel {
    Empty,
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl CellLabel {
    pub fn to_char(self) -> char {
        match self {
            CellLabel::Empty => '.',
            CellLabel::Alpha => 'a',
            CellLabel::Beta => 'b',
            CellLabel::Gamma => 'g',
            CellLabel::Delta => 'd',
        }
    }

    pub fn from_char(c: char) -> Option<CellLabel> {
        Some(match c {
            '.' => CellLabel::Empty,
            'a' => CellLabel::Alpha,
            'b' => CellLabel::Beta,
            'g' => CellLabel::Gamma,
            'd' => CellLabel::Delta,
            _ => return None,
        })
    }

    fn var(self) -> Option<Var> {
        match self {
            CellLabel::Empty => None,
            CellLabel::Alpha => Some(Var::Alpha),
            CellLabel::Beta => Some(Var::Beta),
            CellLabel::Gamma => Some(Var::Gamma),
            CellLabel::Delta => Some(Var::Delta),
        }
    }
}

/// An ASEP state: a word over {occupied, empty}, site 1 leftmost.
///
/// Prints as a 0/1 string (`1` = occupied). For a tableau this is its type:
/// the diagonal read from northeast to southwest with a/d mapping to 1 and
/// b/g mapping to 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StateWord {
    bits: Vec<bool>,
}

impl StateWord {
    pub fn new(bits: Vec<bool>) -> StateWord {
        StateWord { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, site: usize) -> bool {
        self.bits[site]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn reversed(&self) -> StateWord {
        StateWord {
            bits: self.bits.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> StateWord {
        StateWord {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// All 2^n words of length n, in lexicographic (numeric) order.
    pub fn all(n: usize) -> Vec<StateWord> {
        (0..1usize << n)
            .map(|mask| StateWord::from_index(n, mask))
            .collect()
    }

    /// Decode from an integer with site 1 as the most significant bit.
    pub fn from_index(n: usize, index: usize) -> StateWord {
        StateWord {
            bits: (0..n).map(|i| (index >> (n - 1 - i)) & 1 == 1).collect(),
        }
    }

    /// Encode with site 1 as the most significant bit.
    pub fn to_index(&self) -> usize {
        self.bits.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
    }
}

impl fmt::Display for StateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for StateWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<StateWord> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("invalid state word `{s}`"))),
            })
            .collect::<Result<Vec<bool>>>()
            .map(StateWord::new)
    }
}

/// A staircase-shaped labeled grid.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StaircaseTableau {
    n: usize,
    rows: Vec<Vec<CellLabel>>,
}

/// A cell after q/u filling: one of the four letters or a q/u mark.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FilledCell {
    Alpha,
    Beta,
    Gamma,
    Delta,
    QMark,
    UMark,
}

impl FilledCell {
    fn var(self) -> Var {
        match self {
            FilledCell::Alpha => Var::Alpha,
            FilledCell::Beta => Var::Beta,
            FilledCell::Gamma => Var::Gamma,
            FilledCell::Delta => Var::Delta,
            FilledCell::QMark => Var::Q,
            FilledCell::UMark => Var::U,
        }
    }
}

/// Same shape as the source tableau, every cell resolved to a variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FilledGrid {
    n: usize,
    rows: Vec<Vec<FilledCell>>,
}

impl FilledGrid {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<FilledCell>] {
        &self.rows
    }

    /// Product of all cell labels.
    pub fn weight(&self) -> Monomial {
        let mut exps = [0u32; 6];
        for row in &self.rows {
            for &c in row {
                exps[c.var().index()] += 1;
            }
        }
        Monomial::from_exps(exps)
    }
}

impl StaircaseTableau {
    /// Build from rows (row r has n+1-r cells, top to bottom). Only the shape
    /// is checked here; use [`StaircaseTableau::is_valid`] for the label rules.
    pub fn from_rows(rows: Vec<Vec<CellLabel>>) -> Result<StaircaseTableau> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Shape("a tableau has at least one row".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n - i {
                return Err(Error::Shape(format!(
                    "row {} has {} cells, expected {}",
                    i + 1,
                    row.len(),
                    n - i
                )));
            }
        }
        Ok(StaircaseTableau { n, rows })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<CellLabel>] {
        &self.rows
    }

    /// Cell at 1-based (row, col); the diagonal cell of row r is (r, n+1-r).
    pub fn cell(&self, row: usize, col: usize) -> CellLabel {
        self.rows[row - 1][col - 1]
    }

    fn diagonal(&self, row: usize) -> CellLabel {
        self.rows[row - 1][self.n - row]
    }

    /// True iff the three label rules hold: diagonals non-empty, rows empty
    /// left of every b/d, columns empty above every a/g.
    pub fn is_valid(&self) -> bool {
        for r in 1..=self.n {
            if self.diagonal(r) == CellLabel::Empty {
                return false;
            }
        }
        for r in 1..=self.n {
            let mut seen_nonempty = false;
            for c in 1..=(self.n + 1 - r) {
                let label = self.cell(r, c);
                if matches!(label, CellLabel::Beta | CellLabel::Delta) && seen_nonempty {
                    return false;
                }
                if label != CellLabel::Empty {
                    seen_nonempty = true;
                }
            }
        }
        for c in 1..=self.n {
            let mut seen_nonempty = false;
            for r in 1..=(self.n + 1 - c) {
                let label = self.cell(r, c);
                if matches!(label, CellLabel::Alpha | CellLabel::Gamma) && seen_nonempty {
                    return false;
                }
                if label != CellLabel::Empty {
                    seen_nonempty = true;
                }
            }
        }
        true
    }

    fn require_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::Validation("tableau violates the label rules".into()))
        }
    }

    /// The diagonal word: 1 for a/d, 0 for b/g, read northeast to southwest.
    pub fn tableau_type(&self) -> Result<StateWord> {
        self.require_valid()?;
        Ok(StateWord::new(
            (1..=self.n)
                .map(|r| matches!(self.diagonal(r), CellLabel::Alpha | CellLabel::Delta))
                .collect(),
        ))
    }

    /// Resolve every empty cell to a q or u mark.
    ///
    /// For an empty cell let R be the nearest label strictly to its right in
    /// its row and B the nearest label strictly below in its column (both
    /// exist because diagonals are labeled). R = b gives u; R = d gives q;
    /// R in {a, g} gives u when B is in {a, d} and q when B is in {b, g}.
    pub fn fill_qu(&self) -> Result<FilledGrid> {
        self.require_valid()?;
        self.fill_with(fill_rule_primary)
    }

    fn fill_with(&self, rule: fn(CellLabel, CellLabel) -> FilledCell) -> Result<FilledGrid> {
        let n = self.n;
        // Nearest label to the right, per row.
        let mut right: Vec<Vec<CellLabel>> = Vec::with_capacity(n);
        for r in 1..=n {
            let len = n + 1 - r;
            let mut acc = vec![CellLabel::Empty; len];
            let mut nearest = CellLabel::Empty;
            for c in (1..=len).rev() {
                acc[c - 1] = nearest;
                let label = self.cell(r, c);
                if label != CellLabel::Empty {
                    nearest = label;
                }
            }
            right.push(acc);
        }
        // Nearest label below, per column.
        let mut below: Vec<Vec<CellLabel>> = Vec::with_capacity(n);
        for c in 1..=n {
            let len = n + 1 - c;
            let mut acc = vec![CellLabel::Empty; len];
            let mut nearest = CellLabel::Empty;
            for r in (1..=len).rev() {
                acc[r - 1] = nearest;
                let label = self.cell(r, c);
                if label != CellLabel::Empty {
                    nearest = label;
                }
            }
            below.push(acc);
        }
        let mut rows = Vec::with_capacity(n);
        for r in 1..=n {
            let mut out = Vec::with_capacity(n + 1 - r);
            for c in 1..=(n + 1 - r) {
                out.push(match self.cell(r, c) {
                    CellLabel::Alpha => FilledCell::Alpha,
                    CellLabel::Beta => FilledCell::Beta,
                    CellLabel::Gamma => FilledCell::Gamma,
                    CellLabel::Delta => FilledCell::Delta,
                    CellLabel::Empty => rule(right[r - 1][c - 1], below[c - 1][r - 1]),
                });
            }
            rows.push(out);
        }
        Ok(FilledGrid { n, rows })
    }

    /// Weight: product of all labels after q/u filling. Always a monomial of
    /// total degree n(n+1)/2.
    pub fn weight(&self) -> Result<Monomial> {
        Ok(self.fill_qu()?.weight())
    }

    /// Dual weight: the mirrored filling, driven by the label below first
    /// (B = a gives u, B = g gives q; B in {b, d} defers to R).
    pub fn dual_weight(&self) -> Result<Monomial> {
        self.require_valid()?;
        Ok(self.fill_with(fill_rule_dual)?.weight())
    }

    /// Transpose and exchange a<->d, b<->g; staircase validity is preserved.
    pub fn transpose_swap(&self) -> StaircaseTableau {
        let n = self.n;
        let mut rows: Vec<Vec<CellLabel>> =
            (0..n).map(|i| vec![CellLabel::Empty; n - i]).collect();
        for r in 1..=n {
            for c in 1..=(n + 1 - r) {
                rows[c - 1][r - 1] = match self.cell(r, c) {
                    CellLabel::Alpha => CellLabel::Delta,
                    CellLabel::Delta => CellLabel::Alpha,
                    CellLabel::Beta => CellLabel::Gamma,
                    CellLabel::Gamma => CellLabel::Beta,
                    CellLabel::Empty => CellLabel::Empty,
                };
            }
        }
        StaircaseTableau { n, rows }
    }

    pub fn contains_gamma_or_delta(&self) -> bool {
        self.rows
            .iter()
            .flatten()
            .any(|&c| matches!(c, CellLabel::Gamma | CellLabel::Delta))
    }

    /// Text form: n on the first line, then one line per row using `.abgd`.
    pub fn to_text(&self) -> String {
        let mut out = self.n.to_string();
        for row in &self.rows {
            out.push('\n');
            out.extend(row.iter().map(|c| c.to_char()));
        }
        out
    }

    pub fn parse_text(s: &str) -> Result<StaircaseTableau> {
        let mut lines = s.lines();
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("missing size line".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("invalid size line".into()))?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing tableau row".into()))?;
            let row = line
                .trim()
                .chars()
                .map(|c| {
                    CellLabel::from_char(c).ok_or_else(|| Error::Parse(format!("bad cell `{c}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        StaircaseTableau::from_rows(rows)
    }

    /// JSON mirror of the text form: `{"size": n, "rows": ["..a", ...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "size": self.n,
            "rows": self.rows.iter()
                .map(|row| row.iter().map(|c| c.to_char()).collect::<String>())
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<StaircaseTableau> {
        let n = v
            .get("size")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing `size`".into()))? as usize;
        let rows_json = v
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing `rows`".into()))?;
        let mut text = n.to_string();
        for row in rows_json {
            let row = row
                .as_str()
                .ok_or_else(|| Error::Parse("rows must be strings".into()))?;
            text.push('\n');
            text.push_str(row);
        }
        StaircaseTableau::parse_text(&text)
    }
}

fn fill_rule_primary(right: CellLabel, below: CellLabel) -> FilledCell {
    match right {
        CellLabel::Beta => FilledCell::UMark,
        CellLabel::Delta => FilledCell::QMark,
        CellLabel::Alpha | CellLabel::Gamma => match below {
            CellLabel::Alpha | CellLabel::Delta => FilledCell::UMark,
            CellLabel::Beta | CellLabel::Gamma => FilledCell::QMark,
            CellLabel::Empty => unreachable!("column bottoms are labeled diagonals"),
        },
        CellLabel::Empty => unreachable!("row ends are labeled diagonals"),
    }
}

fn fill_rule_dual(right: CellLabel, below: CellLabel) -> FilledCell {
    match below {
        CellLabel::Alpha => FilledCell::UMark,
        CellLabel::Gamma => FilledCell::QMark,
        CellLabel::Beta | CellLabel::Delta => match right {
            CellLabel::Alpha | CellLabel::Delta => FilledCell::QMark,
            CellLabel::Beta | CellLabel::Gamma => FilledCell::UMark,
            CellLabel::Empty => unreachable!("row ends are labeled diagonals"),
        },
        CellLabel::Empty => unreachable!("column bottoms are labeled diagonals"),
    }
}

/// Per-diagonal constraint used to prune enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum DiagConstraint {
    Any,
    /// Diagonal must read as occupied (a or d).
    Bullet,
    /// Diagonal must read as empty (b or g).
    Circle,
    /// Diagonal must carry exactly this label.
    Exact(CellLabel),
}

impl DiagConstraint {
    fn allows(self, label: CellLabel) -> bool {
        match self {
            DiagConstraint::Any => true,
            DiagConstraint::Bullet => matches!(label, CellLabel::Alpha | CellLabel::Delta),
            DiagConstraint::Circle => matches!(label, CellLabel::Beta | CellLabel::Gamma),
            DiagConstraint::Exact(want) => label == want,
        }
    }
}

const LABEL_ORDER: [CellLabel; 5] = [
    CellLabel::Empty,
    CellLabel::Alpha,
    CellLabel::Beta,
    CellLabel::Gamma,
    CellLabel::Delta,
];

/// Backtracking generator over valid tableaux in a fixed deterministic order:
/// cells scanned row-major (row 1 first, left to right), labels tried in the
/// order empty < a < b < g < d, with the row/column rules enforced as cells
/// are placed. Scanning row-major means every cell left of or above the
/// current one is already assigned, so the rules reduce to two counters.
struct Walker {
    n: usize,
    filter: Vec<DiagConstraint>,
    /// Flat row-major cell storage.
    cells: Vec<CellLabel>,
    /// (row, col, is_diagonal) per flat index; rows and cols 0-based here.
    coords: Vec<(usize, usize, bool)>,
    row_nonempty: Vec<u32>,
    col_nonempty: Vec<u32>,
    /// Per placed cell, the index into LABEL_ORDER that was chosen.
    choice: Vec<u8>,
}

impl Walker {
    fn new(n: usize, filter: Vec<DiagConstraint>) -> Walker {
        let mut coords = Vec::with_capacity(n * (n + 1) / 2);
        for r in 0..n {
            let len = n - r;
            for c in 0..len {
                coords.push((r, c, c == len - 1));
            }
        }
        Walker {
            n,
            filter,
            cells: vec![CellLabel::Empty; coords.len()],
            coords,
            row_nonempty: vec![0; n],
            col_nonempty: vec![0; n],
            choice: Vec::with_capacity(n * (n + 1) / 2),
        }
    }

    fn allowed(&self, pos: usize, label: CellLabel) -> bool {
        let (r, c, diag) = self.coords[pos];
        let rule_ok = match label {
            CellLabel::Empty => return !diag,
            CellLabel::Alpha | CellLabel::Gamma => self.col_nonempty[c] == 0,
            CellLabel::Beta | CellLabel::Delta => self.row_nonempty[r] == 0,
        };
        rule_ok && (!diag || self.filter[r].allows(label))
    }

    fn place(&mut self, pos: usize, which: u8) {
        let label = LABEL_ORDER[which as usize];
        let (r, c, _) = self.coords[pos];
        self.cells[pos] = label;
        if label != CellLabel::Empty {
            self.row_nonempty[r] += 1;
            self.col_nonempty[c] += 1;
        }
        self.choice.push(which);
    }

    fn unplace(&mut self) -> u8 {
        let which = self.choice.pop().expect("unbalanced unplace");
        let pos = self.choice.len();
        let (r, c, _) = self.coords[pos];
        if self.cells[pos] != CellLabel::Empty {
            self.row_nonempty[r] -= 1;
            self.col_nonempty[c] -= 1;
        }
        self.cells[pos] = CellLabel::Empty;
        which
    }

    /// Extend the current partial assignment cell by cell, always taking the
    /// first allowed label; retreats on dead branches. Returns false when the
    /// search space is exhausted.
    fn descend(&mut self) -> bool {
        while self.choice.len() < self.coords.len() {
            let pos = self.choice.len();
            let mut placed = false;
            for which in 0..LABEL_ORDER.len() as u8 {
                if self.allowed(pos, LABEL_ORDER[which as usize]) {
                    self.place(pos, which);
                    placed = true;
                    break;
                }
            }
            if !placed && !self.retreat() {
                return false;
            }
        }
        true
    }

    /// Undo the deepest choice and move it to its next allowed label,
    /// retreating further while no alternative exists.
    fn retreat(&mut self) -> bool {
        while !self.choice.is_empty() {
            let last = self.unplace();
            let pos = self.choice.len();
            for which in (last + 1)..LABEL_ORDER.len() as u8 {
                if self.allowed(pos, LABEL_ORDER[which as usize]) {
                    self.place(pos, which);
                    return true;
                }
            }
        }
        false
    }

    fn advance(&mut self, first: bool) -> bool {
        if first {
            return self.descend();
        }
        self.retreat() && self.descend()
    }

    fn snapshot(&self) -> StaircaseTableau {
        let mut rows = Vec::with_capacity(self.n);
        let mut idx = 0;
        for r in 0..self.n {
            let len = self.n - r;
            rows.push(self.cells[idx..idx + len].to_vec());
            idx += len;
        }
        StaircaseTableau { n: self.n, rows }
    }

    fn offset(&self, r: usize) -> usize {
        r * (2 * self.n + 1 - r) / 2
    }

    /// Weight exponents of the current (complete) assignment.
    fn weight_exps(&self, keep_u: bool) -> [u32; 6] {
        let n = self.n;
        let mut exps = [0u32; 6];
        // Nearest label right of each cell, per row.
        let mut right = vec![CellLabel::Empty; self.cells.len()];
        for r in 0..n {
            let base = self.offset(r);
            let mut nearest = CellLabel::Empty;
            for c in (0..n - r).rev() {
                right[base + c] = nearest;
                if self.cells[base + c] != CellLabel::Empty {
                    nearest = self.cells[base + c];
                }
            }
        }
        for c in 0..n {
            // Column c exists in rows 0..=(n-1-c); scan bottom to top so the
            // nearest label below is at hand when an empty cell is reached.
            let mut nearest = CellLabel::Empty;
            for r in (0..=(n - 1 - c)).rev() {
                let pos = self.offset(r) + c;
                let label = self.cells[pos];
                if label == CellLabel::Empty {
                    if fill_rule_primary(right[pos], nearest) == FilledCell::QMark {
                        exps[Var::Q.index()] += 1;
                    } else if keep_u {
                        exps[Var::U.index()] += 1;
                    }
                } else {
                    exps[label.var().expect("non-empty").index()] += 1;
                    nearest = label;
                }
            }
        }
        exps
    }

    /// Type bit of diagonal row r (0-based).
    fn diagonal_bit(&self, r: usize) -> bool {
        let pos = self.offset(r) + (self.n - r - 1);
        matches!(self.cells[pos], CellLabel::Alpha | CellLabel::Delta)
    }
}

/// Streaming iterator over all valid tableaux of size n.
pub struct TableauIter {
    walker: Walker,
    started: bool,
    done: bool,
}

impl Iterator for TableauIter {
    type Item = StaircaseTableau;

    fn next(&mut self) -> Option<StaircaseTableau> {
        if self.done {
            return None;
        }
        let first = !self.started;
        self.started = true;
        if self.walker.advance(first) {
            Some(self.walker.snapshot())
        } else {
            self.done = true;
            None
        }
    }
}

fn check_enum_capacity(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(Error::Capacity(format!(
            "exhaustive enumeration supports sizes 1..={MAX_ENUM_N}, got {n}"
        )));
    }
    Ok(())
}

/// Enumerate every valid tableau of size n exactly once, in the documented
/// deterministic order, without materializing the full family.
pub fn enumerate(n: usize) -> Result<TableauIter> {
    check_enum_capacity(n)?;
    Ok(TableauIter {
        walker: Walker::new(n, vec![DiagConstraint::Any; n]),
        started: false,
        done: false,
    })
}

/// Number of valid tableaux of size n (equals 4^n n!).
pub fn count(n: usize) -> Result<u128> {
    check_enum_capacity(n)?;
    let mut walker = Walker::new(n, vec![DiagConstraint::Any; n]);
    let mut total = 0u128;
    let mut first = true;
    while walker.advance(first) {
        first = false;
        total += 1;
    }
    Ok(total)
}

fn gf_filtered(n: usize, filter: Vec<DiagConstraint>, keep_u: bool) -> GfPoly {
    let mut walker = Walker::new(n, filter);
    let mut acc = GfPoly::zero();
    let mut first = true;
    while walker.advance(first) {
        first = false;
        acc.add_term(Monomial::from_exps(walker.weight_exps(keep_u)), BigInt::one());
    }
    acc
}

/// Z_n: the sum of the weights of all tableaux of size n. With `keep_u`
/// false, u is specialized to 1. Sizes beyond the enumeration range are
/// served by the transfer-matrix route (with the u-grading restored from
/// homogeneity when requested).
pub fn gf_total(n: usize, keep_u: bool) -> Result<GfPoly> {
    if n == 0 {
        return Ok(GfPoly::one());
    }
    if n <= MAX_ENUM_N {
        return Ok(gf_filtered(n, vec![DiagConstraint::Any; n], keep_u));
    }
    if n > MAX_TRANSFER_N {
        return Err(Error::Capacity(format!(
            "generating functions supported up to size {MAX_TRANSFER_N}, got {n}"
        )));
    }
    let z = crate::ansatz::partition_function(n);
    if keep_u {
        z.homogenize_u((n * (n + 1) / 2) as u32)
    } else {
        Ok(z)
    }
}

/// Generating function for tableaux of the given type.
pub fn gf_by_type(n: usize, word: &StateWord) -> Result<GfPoly> {
    if word.len() != n {
        return Err(Error::Domain(format!(
            "type has length {}, expected {n}",
            word.len()
        )));
    }
    if n == 0 {
        return Ok(GfPoly::one());
    }
    if n <= MAX_ENUM_N {
        let filter: Vec<DiagConstraint> = word
            .bits()
            .iter()
            .map(|&b| {
                if b {
                    DiagConstraint::Bullet
                } else {
                    DiagConstraint::Circle
                }
            })
            .collect();
        return Ok(gf_filtered(n, filter, true));
    }
    if n > MAX_TRANSFER_N {
        return Err(Error::Capacity(format!(
            "generating functions supported up to size {MAX_TRANSFER_N}, got {n}"
        )));
    }
    let letters = crate::ansatz::AnsatzWord::from_type(word);
    crate::ansatz::TransferCache::new()
        .wxv(&letters)
        .homogenize_u((n * (n + 1) / 2) as u32)
}

/// Generating functions of all 2^n types in one enumeration pass.
pub fn gf_all_types(n: usize) -> Result<BTreeMap<StateWord, GfPoly>> {
    check_enum_capacity(n)?;
    let mut map: BTreeMap<StateWord, GfPoly> = StateWord::all(n)
        .into_iter()
        .map(|w| (w, GfPoly::zero()))
        .collect();
    let mut walker = Walker::new(n, vec![DiagConstraint::Any; n]);
    let mut first = true;
    while walker.advance(first) {
        first = false;
        let word = StateWord::new((0..n).map(|r| walker.diagonal_bit(r)).collect());
        let exps = walker.weight_exps(true);
        map.get_mut(&word)
            .expect("all words preinserted")
            .add_term(Monomial::from_exps(exps), BigInt::one());
    }
    Ok(map)
}

/// Generating function for tableaux whose diagonal reads as occupied at each
/// of the given 1-based positions (other positions unconstrained).
pub fn gf_with_bullets_at(n: usize, positions: &[usize]) -> Result<GfPoly> {
    check_enum_capacity(n)?;
    let mut filter = vec![DiagConstraint::Any; n];
    for &p in positions {
        if p == 0 || p > n {
            return Err(Error::Domain(format!("position {p} outside 1..={n}")));
        }
        filter[p - 1] = DiagConstraint::Bullet;
    }
    Ok(gf_filtered(n, filter, true))
}

/// Z_n computed with enumeration subtrees split across OS threads.
///
/// The family is partitioned by the labels of the first two diagonal cells
/// (16 independent subtrees for n >= 2); partial sums are merged in subtree
/// order, so the result is identical to the single-threaded one.
pub fn gf_total_threaded(n: usize, keep_u: bool, threads: usize) -> Result<GfPoly> {
    if threads <= 1 || !(2..=MAX_ENUM_N).contains(&n) {
        return gf_total(n, keep_u);
    }
    let four = [
        CellLabel::Alpha,
        CellLabel::Beta,
        CellLabel::Gamma,
        CellLabel::Delta,
    ];
    let mut subtrees = Vec::new();
    for &d1 in &four {
        for &d2 in &four {
            let mut filter = vec![DiagConstraint::Any; n];
            filter[0] = DiagConstraint::Exact(d1);
            filter[1] = DiagConstraint::Exact(d2);
            subtrees.push(filter);
        }
    }
    let threads = threads.min(subtrees.len());
    let mut partials: Vec<Option<GfPoly>> = vec![None; subtrees.len()];
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads {
            let subtrees = &subtrees;
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                for (i, filter) in subtrees.iter().enumerate() {
                    if i % threads == t {
                        out.push((i, gf_filtered(n, filter.clone(), keep_u)));
                    }
                }
                out
            }));
        }
        for h in handles {
            for (i, p) in h.join().expect("enumeration worker panicked") {
                partials[i] = Some(p);
            }
        }
    });
    let mut acc = GfPoly::zero();
    for p in partials.into_iter().flatten() {
        acc.add_assign_ref(&p);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tableau(text: &str) -> StaircaseTableau {
        StaircaseTableau::parse_text(text).unwrap()
    }

    #[test]
    fn validity_rules() {
        assert!(tableau("1\na").is_valid());
        // (1,1) left of the d at (1,2) must be empty.
        assert!(!tableau("2\nad\na").is_valid());
        // The a/g/d tableau from the size-2 family.
        assert!(tableau("2\nga\nd").is_valid());
        // Diagonal cells may not be empty.
        assert!(!tableau("2\na.\na").is_valid());
        // Shape errors are rejected at construction.
        assert!(matches!(
            StaircaseTableau::parse_text("2\na\nb"),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn types_read_northeast_to_southwest() {
        assert_eq!(tableau("1\nb").tableau_type().unwrap().to_string(), "0");
        assert_eq!(tableau("2\n.a\nd").tableau_type().unwrap().to_string(), "11");
        assert_eq!(
            tableau("3\n..g\n.a\nb").tableau_type().unwrap().to_string(),
            "010"
        );
    }

    #[test]
    fn fill_and_weight_examples() {
        // Empty corner sees a to the right, a below: u.
        assert_eq!(
            tableau("2\n.a\na").weight().unwrap(),
            Monomial::from_exps([2, 0, 0, 0, 0, 1])
        );
        // Sees d to the right: q.
        assert_eq!(
            tableau("2\n.d\nd").weight().unwrap(),
            Monomial::from_exps([0, 0, 0, 2, 1, 0])
        );
        // Sees a to the right, d below: u.
        assert_eq!(
            tableau("2\n.a\nd").weight().unwrap(),
            Monomial::from_exps([1, 0, 0, 1, 0, 1])
        );
        assert_eq!(tableau("1\ng").weight().unwrap(), Monomial::var(Var::Gamma));
        assert_eq!(
            tableau("2\nga\nd").weight().unwrap(),
            Monomial::from_exps([1, 0, 1, 1, 0, 0])
        );
    }

    #[test]
    fn dual_weight_examples() {
        assert_eq!(
            tableau("1\nd").dual_weight().unwrap(),
            Monomial::var(Var::Delta)
        );
        // Sees a below: u.
        assert_eq!(
            tableau("2\n.a\na").dual_weight().unwrap(),
            Monomial::from_exps([2, 0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn duality_via_transpose_swap() {
        // The dual weight of the transposed-and-relabeled tableau is the
        // original weight with a<->d, b<->g, q<->u exchanged (the left-right
        // relabeling that transpose_swap performs on the letters).
        let swap = [(Var::Alpha, Var::Delta), (Var::Beta, Var::Gamma), (Var::Q, Var::U)];
        for n in 1..=5 {
            for t in enumerate(n).unwrap() {
                assert_eq!(
                    t.transpose_swap().dual_weight().unwrap(),
                    t.weight().unwrap().swap_vars(&swap),
                    "duality failed for\n{}",
                    t.to_text()
                );
            }
        }
    }

    #[test]
    fn dual_weights_generate_the_same_type_polynomials() {
        // Summed per type, dual weights reproduce the primary generating
        // functions, so either filling describes the same distribution.
        for n in 1..=4 {
            let mut dual: BTreeMap<StateWord, GfPoly> = BTreeMap::new();
            for t in enumerate(n).unwrap() {
                dual.entry(t.tableau_type().unwrap())
                    .or_insert_with(GfPoly::zero)
                    .add_term(t.dual_weight().unwrap(), BigInt::one());
            }
            assert_eq!(dual, gf_all_types(n).unwrap());
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(count(1).unwrap(), 4);
        assert_eq!(count(2).unwrap(), 32);
        assert_eq!(count(3).unwrap(), 384);
        assert_eq!(count(4).unwrap(), 6144);
        assert!(count(0).is_err());
        assert!(count(MAX_ENUM_N + 1).is_err());
    }

    #[test]
    fn enumeration_order_is_stable() {
        let first: Vec<String> = enumerate(2).unwrap().take(5).map(|t| t.to_text()).collect();
        assert_eq!(
            first,
            vec!["2\n.a\na", "2\n.a\nb", "2\n.a\ng", "2\n.a\nd", "2\n.b\na"]
        );
        let all: Vec<StaircaseTableau> = enumerate(2).unwrap().collect();
        assert_eq!(all.len(), 32);
        for t in &all {
            assert!(t.is_valid());
        }
    }

    #[test]
    fn gf_total_small() {
        assert_eq!(gf_total(0, true).unwrap(), GfPoly::one());
        assert_eq!(gf_total(1, true).unwrap().to_text(), "a + b + g + d");
        let z2 = gf_total(2, true).unwrap();
        let mass: u32 = z2.terms().map(|(_, c)| u32::try_from(c).unwrap()).sum();
        assert_eq!(mass, 32);
        for (m, _) in z2.terms() {
            assert_eq!(m.degree(), 3);
        }
    }

    #[test]
    fn gf_by_type_worked_example() {
        let gf = gf_by_type(2, &"11".parse().unwrap()).unwrap();
        let expected =
            GfPoly::parse_text("a^2 d + a^2 u + a b d + a g d + a d^2 + a d q + a d u + d^2 q")
                .unwrap();
        assert_eq!(gf, expected);
        assert_eq!(
            gf_by_type(1, &"0".parse().unwrap()).unwrap().to_text(),
            "b + g"
        );
    }

    #[test]
    fn types_partition_the_family() {
        for n in 1..=4 {
            let total = gf_total(n, true).unwrap();
            let mut sum = GfPoly::zero();
            for (_, gf) in gf_all_types(n).unwrap() {
                sum.add_assign_ref(&gf);
            }
            assert_eq!(sum, total);
        }
    }

    #[test]
    fn weights_are_homogeneous() {
        for n in 1..=5 {
            let want = (n * (n + 1) / 2) as u32;
            for t in enumerate(n).unwrap() {
                assert_eq!(t.weight().unwrap().degree(), want);
            }
        }
    }

    #[test]
    fn evaluated_gf_matches_termwise_weight_sum() {
        // Z_2 at a rational point equals the sum of the 32 weights, each
        // evaluated as a standalone monomial.
        use crate::exactmath::parse_rational;
        let point = [
            parse_rational("1/2").unwrap(),
            parse_rational("1/3").unwrap(),
            parse_rational("1/5").unwrap(),
            parse_rational("1/7").unwrap(),
            parse_rational("1/11").unwrap(),
            parse_rational("1/13").unwrap(),
        ];
        let mut by_hand = parse_rational("0").unwrap();
        for t in enumerate(2).unwrap() {
            let w = GfPoly::from_monomial(t.weight().unwrap(), BigInt::one());
            by_hand += w.eval(&point);
        }
        assert_eq!(gf_total(2, true).unwrap().eval(&point), by_hand);
    }

    #[test]
    fn size_seven_weights_have_degree_28() {
        // Enumeration at size 7 is streaming; spot-check the first few.
        for t in enumerate(7).unwrap().take(200) {
            assert_eq!(t.weight().unwrap().degree(), 28);
        }
    }

    #[test]
    fn gamma_delta_free_tableaux_are_counted_by_factorials() {
        for n in 1..=5 {
            let count = enumerate(n)
                .unwrap()
                .filter(|t| !t.contains_gamma_or_delta())
                .count();
            let factorial: usize = (1..=n + 1).product();
            assert_eq!(count, factorial);
        }
    }

    #[test]
    fn bullets_filter_matches_types() {
        // Constraining every position to a bullet is the all-ones type.
        let a = gf_with_bullets_at(3, &[1, 2, 3]).unwrap();
        let b = gf_by_type(3, &"111".parse().unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            gf_with_bullets_at(2, &[]).unwrap(),
            gf_total(2, true).unwrap()
        );
        assert!(gf_with_bullets_at(2, &[3]).is_err());
    }

    #[test]
    fn threaded_gf_matches_serial() {
        for threads in [2, 3, 8] {
            assert_eq!(
                gf_total_threaded(3, true, threads).unwrap(),
                gf_total(3, true).unwrap()
            );
        }
    }

    #[test]
    fn text_and_json_roundtrip() {
        for t in enumerate(3).unwrap().take(50) {
            assert_eq!(StaircaseTableau::parse_text(&t.to_text()).unwrap(), t);
            assert_eq!(StaircaseTableau::from_json(&t.to_json()).unwrap(), t);
        }
    }
}
