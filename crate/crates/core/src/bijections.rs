//! Bijections among gamma/delta-free staircase tableaux, permutation
//! tableaux, and alternative tableaux.
//!
//! Young-diagram shapes are stored as their southeast border word, read from
//! the northeast corner to the southwest: a `v` step is a row (top to
//! bottom), an `h` step is a column (right to left). A row's length is the
//! number of `h` steps after its `v`; a column's length is the number of `v`
//! steps before its `h`. Zero-length rows and columns are therefore
//! represented faithfully.


use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::tableaux::{CellLabel, StaircaseTableau};

/// One step of the southeast border walk.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BorderStep {
    /// Vertical step: indexes a row.
    Down,
    /// Horizontal step: indexes a column.
    Left,
}

impl BorderStep {
    fn to_char(self) -> char {
        match self {
            BorderStep::Down => 'v',
            BorderStep::Left => 'h',
        }
    }

    fn from_char(c: char) -> Option<BorderStep> {
        match c {
            'v' => Some(BorderStep::Down),
            'h' => Some(BorderStep::Left),
            _ => None,
        }
    }
}

fn parse_border(s: &str) -> Result<Vec<BorderStep>> {
    s.chars()
        .map(|c| {
            BorderStep::from_char(c).ok_or_else(|| Error::Parse(format!("bad border step `{c}`")))
        })
        .collect()
}

fn border_string(border: &[BorderStep]) -> String {
    border.iter().map(|s| s.to_char()).collect()
}

/// Row lengths, top to bottom, implied by a border word.
fn row_lengths(border: &[BorderStep]) -> Vec<usize> {
    let total_cols = border.iter().filter(|&&s| s == BorderStep::Left).count();
    let mut seen_cols = 0;
    let mut out = Vec::new();
    for &step in border {
        match step {
            BorderStep::Left => seen_cols += 1,
            BorderStep::Down => out.push(total_cols - seen_cols),
        }
    }
    out
}

fn num_columns(border: &[BorderStep]) -> usize {
    border.iter().filter(|&&s| s == BorderStep::Left).count()
}

/// Rebuild the border word from row lengths (zeros allowed) and a column
/// count at least the first row length.
fn border_from_shape(lengths: &[usize], n_cols: usize) -> Vec<BorderStep> {
    let mut word = Vec::with_capacity(lengths.len() + n_cols);
    let mut next_row = 0;
    for c in (1..=n_cols).rev() {
        while next_row < lengths.len() && lengths[next_row] >= c {
            word.push(BorderStep::Down);
            next_row += 1;
        }
        word.push(BorderStep::Left);
    }
    while next_row < lengths.len() {
        word.push(BorderStep::Down);
        next_row += 1;
    }
    word
}

fn check_cells<T>(border: &[BorderStep], rows: &[Vec<T>]) -> Result<Vec<usize>> {
    let lengths = row_lengths(border);
    if rows.len() != lengths.len() {
        return Err(Error::Shape(format!(
            "{} cell rows for {} border rows",
            rows.len(),
            lengths.len()
        )));
    }
    for (i, (row, want)) in rows.iter().zip(&lengths).enumerate() {
        if row.len() != *want {
            return Err(Error::Shape(format!(
                "row {} has {} cells, expected {want}",
                i + 1,
                row.len()
            )));
        }
    }
    Ok(lengths)
}

/// A 0/1-filled Young diagram in which every column holds a 1 and no 0 has
/// both a 1 above it and a 1 to its left. Rows may be empty; columns may
/// not. Its length is rows + columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermutationTableau {
    border: Vec<BorderStep>,
    rows: Vec<Vec<u8>>,
}

impl PermutationTableau {
    pub fn new(border: Vec<BorderStep>, rows: Vec<Vec<u8>>) -> Result<PermutationTableau> {
        let lengths = check_cells(&border, &rows)?;
        let n_cols = num_columns(&border);
        if lengths.first().copied().unwrap_or(0) != n_cols {
            return Err(Error::Validation(
                "permutation tableaux admit no zero-length columns".into(),
            ));
        }
        for row in &rows {
            if row.iter().any(|&c| c > 1) {
                return Err(Error::Validation("cells must be 0 or 1".into()));
            }
        }
        let pt = PermutationTableau { border, rows };
        for c in 0..n_cols {
            if !pt.column_cells(c).any(|v| v == 1) {
                return Err(Error::Validation(format!(
                    "column {} contains no 1",
                    c + 1
                )));
            }
        }
        for (i, row) in pt.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 && pt.one_above(i, c) && row[..c].contains(&1) {
                    return Err(Error::Validation(format!(
                        "restricted 0 at row {}, column {} has a 1 to its left",
                        i + 1,
                        c + 1
                    )));
                }
            }
        }
        Ok(pt)
    }

    pub fn length(&self) -> usize {
        self.border.len()
    }

    pub fn border(&self) -> &[BorderStep] {
        &self.border
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Cells of a 0-based column, top to bottom.
    fn column_cells(&self, c: usize) -> impl Iterator<Item = u8> + '_ {
        self.rows.iter().filter_map(move |row| row.get(c).copied())
    }

    fn one_above(&self, i: usize, c: usize) -> bool {
        self.rows[..i].iter().any(|row| row.get(c) == Some(&1))
    }

    /// Text form: the border word, then one `01` line per row.
    pub fn to_text(&self) -> String {
        let mut out = border_string(&self.border);
        for row in &self.rows {
            out.push('\n');
            out.extend(row.iter().map(|&v| if v == 1 { '1' } else { '0' }));
        }
        out
    }

    pub fn parse_text(s: &str) -> Result<PermutationTableau> {
        let lines: Vec<&str> = s.lines().collect();
        let border = parse_border(lines.first().copied().unwrap_or("").trim())?;
        let n_rows = border.iter().filter(|&&b| b == BorderStep::Down).count();
        let mut rows = Vec::with_capacity(n_rows);
        for i in 0..n_rows {
            let line = lines.get(1 + i).copied().unwrap_or("").trim();
            let row = line
                .chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(Error::Parse(format!("bad cell `{c}`"))),
                })
                .collect::<Result<Vec<u8>>>()?;
            rows.push(row);
        }
        PermutationTableau::new(border, rows)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "border": border_string(&self.border),
            "rows": self.rows.iter()
                .map(|row| row.iter().map(|&v| if v == 1 { '1' } else { '0' }).collect::<String>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Content of an alternative-tableau cell.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AltCell {
    Empty,
    LeftArrow,
    UpArrow,
}

impl AltCell {
    fn to_char(self) -> char {
        match self {
            AltCell::Empty => '.',
            AltCell::LeftArrow => '<',
            AltCell::UpArrow => '^',
        }
    }

    fn from_char(c: char) -> Option<AltCell> {
        match c {
            '.' => Some(AltCell::Empty),
            '<' => Some(AltCell::LeftArrow),
            '^' => Some(AltCell::UpArrow),
            _ => None,
        }
    }
}

/// An arrow-filled Young diagram: everything left of a `<` is empty and
/// everything above a `^` is empty. Rows and columns may both be empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlternativeTableau {
    border: Vec<BorderStep>,
    rows: Vec<Vec<AltCell>>,
}

impl AlternativeTableau {
    pub fn new(border: Vec<BorderStep>, rows: Vec<Vec<AltCell>>) -> Result<AlternativeTableau> {
        check_cells(&border, &rows)?;
        let at = AlternativeTableau { border, rows };
        for (i, row) in at.rows.iter().enumerate() {
            for (c, &cell) in row.iter().enumerate() {
                match cell {
                    AltCell::LeftArrow => {
                        if row[..c].iter().any(|&w| w != AltCell::Empty) {
                            return Err(Error::Validation(format!(
                                "left arrow at row {}, column {} has a filled box to its left",
                                i + 1,
                                c + 1
                            )));
                        }
                    }
                    AltCell::UpArrow => {
                        if at.rows[..i].iter().any(|r| {
                            r.get(c).map(|&w| w != AltCell::Empty).unwrap_or(false)
                        }) {
                            return Err(Error::Validation(format!(
                                "up arrow at row {}, column {} has a filled box above it",
                                i + 1,
                                c + 1
                            )));
                        }
                    }
                    AltCell::Empty => {}
                }
            }
        }
        Ok(at)
    }

    pub fn length(&self) -> usize {
        self.border.len()
    }

    pub fn border(&self) -> &[BorderStep] {
        &self.border
    }

    pub fn rows(&self) -> &[Vec<AltCell>] {
        &self.rows
    }

    pub fn num_columns(&self) -> usize {
        num_columns(&self.border)
    }

    /// Text form: the border word, then one `.<^` line per row.
    pub fn to_text(&self) -> String {
        let mut out = border_string(&self.border);
        for row in &self.rows {
            out.push('\n');
            out.extend(row.iter().map(|c| c.to_char()));
        }
        out
    }

    pub fn parse_text(s: &str) -> Result<AlternativeTableau> {
        let lines: Vec<&str> = s.lines().collect();
        let border = parse_border(lines.first().copied().unwrap_or("").trim())?;
        let n_rows = border.iter().filter(|&&b| b == BorderStep::Down).count();
        let mut rows = Vec::with_capacity(n_rows);
        for i in 0..n_rows {
            let line = lines.get(1 + i).copied().unwrap_or("").trim();
            let row = line
                .chars()
                .map(|c| {
                    AltCell::from_char(c).ok_or_else(|| Error::Parse(format!("bad cell `{c}`")))
                })
                .collect::<Result<Vec<AltCell>>>()?;
            rows.push(row);
        }
        AlternativeTableau::new(border, rows)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "border": border_string(&self.border),
            "rows": self.rows.iter()
                .map(|row| row.iter().map(|c| c.to_char()).collect::<String>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Replace every rightmost restricted 0 with a left arrow and every
/// column-topmost 1 outside the top row with an up arrow, then delete the
/// top row (its columns survive as possibly-empty columns).
pub fn perm_to_alt(pt: &PermutationTableau) -> Result<AlternativeTableau> {
    let lengths = row_lengths(&pt.border);
    let n_cols = num_columns(&pt.border);
    // Topmost 1 per column (every column has one).
    let topmost: Vec<usize> = (0..n_cols)
        .map(|c| {
            pt.rows
                .iter()
                .position(|row| row.get(c) == Some(&1))
                .expect("validated column")
        })
        .collect();
    // Rightmost restricted 0 per row.
    let rightmost: Vec<Option<usize>> = pt
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .rev()
                .find(|&(c, &v)| v == 0 && topmost[c] < i)
                .map(|(c, _)| c)
        })
        .collect();
    let mut rows = Vec::with_capacity(lengths.len().saturating_sub(1));
    for (i, row) in pt.rows.iter().enumerate().skip(1) {
        let mut out = Vec::with_capacity(row.len());
        for (c, &v) in row.iter().enumerate() {
            out.push(if v == 1 && topmost[c] == i {
                AltCell::UpArrow
            } else if v == 0 && rightmost[i] == Some(c) {
                AltCell::LeftArrow
            } else {
                AltCell::Empty
            });
        }
        rows.push(out);
    }
    let border = border_from_shape(&lengths[1..], n_cols);
    AlternativeTableau::new(border, rows)
}

/// Inverse of [`perm_to_alt`]: restore the top row and rebuild the 0/1
/// filling from the arrow marks. A column with no up arrow has its topmost 1
/// in the top row; below a column's topmost 1, a cell is 1 exactly when it
/// sits right of its row's left arrow (or the row has none).
pub fn alt_to_perm(at: &AlternativeTableau) -> Result<PermutationTableau> {
    let alt_lengths = row_lengths(&at.border);
    let n_cols = num_columns(&at.border);
    // Topmost-1 row per column in the restored tableau (0 = new top row).
    let topmost: Vec<usize> = (0..n_cols)
        .map(|c| {
            at.rows
                .iter()
                .position(|row| row.get(c) == Some(&AltCell::UpArrow))
                .map(|i| i + 1)
                .unwrap_or(0)
        })
        .collect();
    let rightmost: Vec<Option<usize>> = at
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .find(|&(_, &v)| v == AltCell::LeftArrow)
                .map(|(c, _)| c)
        })
        .collect();
    let mut rows = Vec::with_capacity(alt_lengths.len() + 1);
    rows.push((0..n_cols).map(|c| u8::from(topmost[c] == 0)).collect());
    for (i, len) in alt_lengths.iter().enumerate() {
        let row_index = i + 1;
        let row = (0..*len)
            .map(|c| {
                u8::from(
                    row_index == topmost[c]
                        || (row_index > topmost[c]
                            && rightmost[i].map(|r| c > r).unwrap_or(true)),
                )
            })
            .collect();
        rows.push(row);
    }
    let mut lengths = Vec::with_capacity(alt_lengths.len() + 1);
    lengths.push(n_cols);
    lengths.extend_from_slice(&alt_lengths);
    PermutationTableau::new(border_from_shape(&lengths, n_cols), rows)
}

fn column_diagonals(st: &StaircaseTableau) -> Vec<CellLabel> {
    // Diagonal label of each 1-based column c = label of row n+1-c.
    let n = st.size();
    (1..=n).map(|c| st.cell(n + 1 - c, c)).collect()
}

/// Map a gamma/delta-free staircase tableau to an alternative tableau: each
/// diagonal a becomes a vertical border step (its column above is deleted),
/// each diagonal b a horizontal one (its row to the left is deleted);
/// surviving a's become up arrows and b's left arrows.
pub fn staircase_to_alt(st: &StaircaseTableau) -> Result<AlternativeTableau> {
    if !st.is_valid() {
        return Err(Error::Validation("invalid staircase tableau".into()));
    }
    if st.contains_gamma_or_delta() {
        return Err(Error::Domain(
            "the bijection applies to tableaux without g or d".into(),
        ));
    }
    let n = st.size();
    let col_diag = column_diagonals(st);
    let border: Vec<BorderStep> = (1..=n)
        .map(|r| match st.cell(r, n + 1 - r) {
            CellLabel::Alpha => BorderStep::Down,
            CellLabel::Beta => BorderStep::Left,
            _ => unreachable!("validated and gamma/delta-free"),
        })
        .collect();
    let mut rows = Vec::new();
    for r in 1..=n {
        if border[r - 1] != BorderStep::Down {
            continue;
        }
        // Surviving cells of this row: strictly left of the diagonal, in
        // columns whose own diagonal is b.
        let mut out = Vec::new();
        for c in 1..=(n - r) {
            if col_diag[c - 1] == CellLabel::Beta {
                out.push(match st.cell(r, c) {
                    CellLabel::Empty => AltCell::Empty,
                    CellLabel::Alpha => AltCell::UpArrow,
                    CellLabel::Beta => AltCell::LeftArrow,
                    _ => unreachable!("gamma/delta-free"),
                });
            }
        }
        rows.push(out);
    }
    AlternativeTableau::new(border, rows)
}

/// Inverse of [`staircase_to_alt`]: the border word dictates the diagonal
/// (vertical step -> a, horizontal step -> b) and the arrows embed back into
/// the surviving cells.
pub fn alt_to_staircase(at: &AlternativeTableau) -> Result<StaircaseTableau> {
    let n = at.length();
    if n == 0 {
        return Err(Error::Domain("staircase tableaux have size >= 1".into()));
    }
    let mut grid: Vec<Vec<CellLabel>> = (0..n).map(|i| vec![CellLabel::Empty; n - i]).collect();
    for (r, &step) in at.border.iter().enumerate() {
        grid[r][n - 1 - r] = match step {
            BorderStep::Down => CellLabel::Alpha,
            BorderStep::Left => CellLabel::Beta,
        };
    }
    let beta_cols: Vec<usize> = (1..=n)
        .filter(|&c| at.border[n - c] == BorderStep::Left)
        .collect();
    let mut alt_rows = at.rows.iter();
    for r in 1..=n {
        if at.border[r - 1] != BorderStep::Down {
            continue;
        }
        let row = alt_rows.next().expect("shape checked at construction");
        let targets: Vec<usize> = beta_cols.iter().copied().filter(|&c| c <= n - r).collect();
        debug_assert_eq!(targets.len(), row.len());
        for (cell, &c) in row.iter().zip(&targets) {
            grid[r - 1][c - 1] = match cell {
                AltCell::Empty => CellLabel::Empty,
                AltCell::UpArrow => CellLabel::Alpha,
                AltCell::LeftArrow => CellLabel::Beta,
            };
        }
    }
    let st = StaircaseTableau::from_rows(grid)?;
    if !st.is_valid() {
        return Err(Error::Validation(
            "alternative tableau does not embed into a valid staircase".into(),
        ));
    }
    Ok(st)
}

fn enumerate_fillings<T: Copy>(
    lengths: &[usize],
    choices: &[T],
    mut f: impl FnMut(&[Vec<T>]),
) {
    let total: usize = lengths.iter().sum();
    let base = choices.len();
    let combos = base.checked_pow(total as u32).expect("small shapes only");
    for mut code in 0..combos {
        let mut rows: Vec<Vec<T>> = Vec::with_capacity(lengths.len());
        for &len in lengths {
            let mut row = Vec::with_capacity(len);
            for _ in 0..len {
                row.push(choices[code % base]);
                code /= base;
            }
            rows.push(row);
        }
        f(&rows);
    }
}

/// All valid alternative tableaux of the given length, by brute force over
/// border words and fillings.
pub fn enumerate_alternative(length: usize) -> Vec<AlternativeTableau> {
    let mut out = Vec::new();
    for mask in 0..1usize << length {
        let border: Vec<BorderStep> = (0..length)
            .map(|p| {
                if (mask >> (length - 1 - p)) & 1 == 1 {
                    BorderStep::Down
                } else {
                    BorderStep::Left
                }
            })
            .collect();
        let lengths = row_lengths(&border);
        enumerate_fillings(
            &lengths,
            &[AltCell::Empty, AltCell::LeftArrow, AltCell::UpArrow],
            |rows| {
                if let Ok(at) = AlternativeTableau::new(border.clone(), rows.to_vec()) {
                    out.push(at);
                }
            },
        );
    }
    out
}

/// All valid permutation tableaux of the given length, by brute force.
pub fn enumerate_permutation(length: usize) -> Vec<PermutationTableau> {
    let mut out = Vec::new();
    for mask in 0..1usize << length {
        let border: Vec<BorderStep> = (0..length)
            .map(|p| {
                if (mask >> (length - 1 - p)) & 1 == 1 {
                    BorderStep::Down
                } else {
                    BorderStep::Left
                }
            })
            .collect();
        let lengths = row_lengths(&border);
        if lengths.first().copied().unwrap_or(0) != num_columns(&border) {
            continue;
        }
        enumerate_fillings(&lengths, &[0u8, 1u8], |rows| {
            if let Ok(pt) = PermutationTableau::new(border.clone(), rows.to_vec()) {
                out.push(pt);
            }
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn border_shape_roundtrip() {
        for border_text in ["vh", "hv", "vvhh", "vhvh", "hhvv", "v", "h"] {
            let border = parse_border(border_text).unwrap();
            let lengths = row_lengths(&border);
            let cols = num_columns(&border);
            assert_eq!(border_from_shape(&lengths, cols), border, "{border_text}");
        }
        // One row of two cells over an empty row.
        assert_eq!(row_lengths(&parse_border("vhhv").unwrap()), vec![2, 0]);
    }

    #[test]
    fn smallest_permutation_tableaux() {
        // Length 2: a single filled box, and two empty rows.
        let all = enumerate_permutation(2);
        assert_eq!(all.len(), 2);
        let alts: Vec<AlternativeTableau> =
            all.iter().map(|pt| perm_to_alt(pt).unwrap()).collect();
        assert!(alts.iter().all(|at| at.length() == 1));
        assert_ne!(alts[0], alts[1]);
    }

    #[test]
    fn length_three_permutation_tableaux_map_bijectively() {
        let pts = enumerate_permutation(3);
        assert_eq!(pts.len(), factorial(3));
        let mut images: Vec<AlternativeTableau> =
            pts.iter().map(|pt| perm_to_alt(pt).unwrap()).collect();
        assert!(images.iter().all(|at| at.length() == 2));
        images.sort_by_key(|at| at.to_text());
        images.dedup();
        assert_eq!(images.len(), 6);
    }

    #[test]
    fn staircase_examples() {
        // A single a produces one vertical step and a single empty row.
        let st = StaircaseTableau::parse_text("1\na").unwrap();
        let at = staircase_to_alt(&st).unwrap();
        assert_eq!(at.border(), &[BorderStep::Down]);
        assert_eq!(at.rows(), &[Vec::<AltCell>::new()]);
        // Diagonal (a, b) with an empty interior: one arrowless cell.
        let st = StaircaseTableau::parse_text("2\n.a\nb").unwrap();
        let at = staircase_to_alt(&st).unwrap();
        assert_eq!(at.border(), parse_border("vh").unwrap().as_slice());
        assert_eq!(at.rows(), &[vec![AltCell::Empty]]);
        // Gamma or delta anywhere is out of domain.
        let st = StaircaseTableau::parse_text("1\ng").unwrap();
        assert!(matches!(staircase_to_alt(&st), Err(Error::Domain(_))));
    }

    #[test]
    fn size_two_staircase_images_are_distinct_and_valid() {
        let tableaux: Vec<StaircaseTableau> = tableaux::enumerate(2)
            .unwrap()
            .filter(|t| !t.contains_gamma_or_delta())
            .collect();
        assert_eq!(tableaux.len(), 6);
        let mut images: Vec<String> = tableaux
            .iter()
            .map(|t| staircase_to_alt(t).unwrap().to_text())
            .collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 6);
    }

    #[test]
    fn families_share_factorial_cardinalities() {
        for n in 1..=4 {
            let staircases = tableaux::enumerate(n)
                .unwrap()
                .filter(|t| !t.contains_gamma_or_delta())
                .count();
            let alts = enumerate_alternative(n).len();
            let perms = enumerate_permutation(n + 1).len();
            assert_eq!(staircases, factorial(n + 1), "staircases at n = {n}");
            assert_eq!(alts, factorial(n + 1), "alternative at n = {n}");
            assert_eq!(perms, factorial(n + 1), "permutation at n = {n}");
        }
    }

    #[test]
    fn roundtrips_on_exhaustive_domains() {
        for n in 1..=4 {
            for at in enumerate_alternative(n) {
                let st = alt_to_staircase(&at).unwrap();
                assert!(!st.contains_gamma_or_delta());
                assert_eq!(staircase_to_alt(&st).unwrap(), at);
                let pt = alt_to_perm(&at).unwrap();
                assert_eq!(pt.length(), n + 1);
                assert_eq!(perm_to_alt(&pt).unwrap(), at);
            }
            for st in tableaux::enumerate(n)
                .unwrap()
                .filter(|t| !t.contains_gamma_or_delta())
            {
                let at = staircase_to_alt(&st).unwrap();
                assert_eq!(alt_to_staircase(&at).unwrap(), st);
            }
            for pt in enumerate_permutation(n + 1) {
                let at = perm_to_alt(&pt).unwrap();
                assert_eq!(alt_to_perm(&at).unwrap(), pt);
            }
        }
    }

    #[test]
    fn composition_reaches_permutation_tableaux() {
        for st in tableaux::enumerate(3)
            .unwrap()
            .filter(|t| !t.contains_gamma_or_delta())
        {
            let pt = alt_to_perm(&staircase_to_alt(&st).unwrap()).unwrap();
            assert_eq!(pt.length(), 4);
        }
    }

    #[test]
    fn invalid_objects_are_rejected() {
        // A column without a 1.
        assert!(matches!(
            PermutationTableau::new(parse_border("vh").unwrap(), vec![vec![0]]),
            Err(Error::Validation(_))
        ));
        // A restricted 0 with a 1 to its left.
        assert!(PermutationTableau::new(
            parse_border("vvhh").unwrap(),
            vec![vec![1, 1], vec![1, 0]]
        )
        .is_err());
        // A filled box left of a left arrow.
        assert!(AlternativeTableau::new(
            parse_border("vhh").unwrap(),
            vec![vec![AltCell::UpArrow, AltCell::LeftArrow]]
        )
        .is_err());
        // Zero-length column in a permutation tableau.
        assert!(PermutationTableau::new(parse_border("hv").unwrap(), vec![vec![]]).is_err());
        // Shape mismatch.
        assert!(matches!(
            AlternativeTableau::new(parse_border("vh").unwrap(), vec![]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn text_and_json_roundtrip() {
        for at in enumerate_alternative(3) {
            assert_eq!(AlternativeTableau::parse_text(&at.to_text()).unwrap(), at);
        }
        for pt in enumerate_permutation(3) {
            assert_eq!(PermutationTableau::parse_text(&pt.to_text()).unwrap(), pt);
        }
    }
}
