//! The acceptance suite: every headline guarantee of the library as a
//! runnable criterion, shared by the `acceptance` test target and the CLI
//! `selftest` subcommand. All checks are exact; none carries a numeric
//! tolerance.

use num_rational::BigRational;
use num_traits::One;

use crate::exactmath::{parse_rational, GfPoly};
use crate::{ansatz, asep, bijections, moments, tableaux};

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub run: fn() -> Result<(), String>,
}

/// The full criterion list, in order.
pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "enumeration cardinality 4^n n! for n = 1..6",
            run: cardinality,
        },
        Criterion {
            id: 2,
            name: "worked type-11 generating function at n = 2",
            run: worked_example,
        },
        Criterion {
            id: 3,
            name: "stationary equivalence of solver and tableaux, n = 1..5",
            run: stationary_equivalence,
        },
        Criterion {
            id: 4,
            name: "transfer products match type generating functions, |X| <= 5",
            run: transfer_equivalence,
        },
        Criterion {
            id: 5,
            name: "matrix-ansatz families and row identities, length <= 3",
            run: matrix_ansatz,
        },
        Criterion {
            id: 6,
            name: "index-decrease identity, |Y| <= 4, indices <= 6",
            run: index_decrease,
        },
        Criterion {
            id: 7,
            name: "moment pipelines agree for k <= 6 at 3 points",
            run: moment_pipelines,
        },
        Criterion {
            id: 8,
            name: "boundary symmetries as polynomial identities, n <= 4",
            run: symmetries,
        },
        Criterion {
            id: 9,
            name: "current closed form vs bond averages, n <= 5",
            run: physical_quantities,
        },
        Criterion {
            id: 10,
            name: "tableau bijections are mutually inverse, n <= 5",
            run: bijection_families,
        },
        Criterion {
            id: 11,
            name: "weights are homogeneous of degree n(n+1)/2, n <= 6",
            run: homogeneity,
        },
    ]
}

fn r(s: &str) -> BigRational {
    parse_rational(s).expect("static rational")
}

/// Three points in (0, 1]^6 with all six coordinates distinct.
fn chain_points() -> Vec<asep::AsepParams> {
    vec![
        asep::AsepParams::new(r("1/2"), r("1/3"), r("1/5"), r("1/7"), r("1/11"), r("1")),
        asep::AsepParams::new(r("2/3"), r("1/4"), r("1/6"), r("1/8"), r("1/9"), r("1/2")),
        asep::AsepParams::new(r("3/5"), r("2/7"), r("3/11"), r("1/13"), r("2/5"), r("9/10")),
    ]
}

fn moment_points() -> Vec<moments::AwParams> {
    vec![
        moments::AwParams::new(r("1/2"), r("1/3"), r("-1/5"), r("-1/7"), r("1/11")),
        moments::AwParams::new(r("1/3"), r("1/5"), r("-2/7"), r("-1/9"), r("1/4")),
        moments::AwParams::new(r("3/5"), r("-1/2"), r("1/7"), r("-2/9"), r("2/11")),
    ]
}

fn cardinality() -> Result<(), String> {
    let expected: [u128; 6] = [4, 32, 384, 6144, 122_880, 2_949_120];
    for (n, want) in expected.iter().enumerate().map(|(i, w)| (i + 1, w)) {
        let got = tableaux::count(n).map_err(|e| e.to_string())?;
        if got != *want {
            return Err(format!("count({n}) = {got}, expected {want}"));
        }
    }
    Ok(())
}

fn worked_example() -> Result<(), String> {
    let got = tableaux::gf_by_type(2, &"11".parse().unwrap()).map_err(|e| e.to_string())?;
    let want =
        GfPoly::parse_text("a^2 d + a^2 u + a b d + a g d + a d^2 + a d q + a d u + d^2 q")
            .expect("static polynomial");
    if got != want {
        return Err(format!("gf_by_type(2, 11) = {got}, expected {want}"));
    }
    Ok(())
}

fn stationary_equivalence() -> Result<(), String> {
    for params in chain_points() {
        for n in 1..=5 {
            let chain = asep::build_chain(n, &params).map_err(|e| e.to_string())?;
            let solved = asep::stationary_exact(&chain).map_err(|e| e.to_string())?;
            let counted = asep::stationary_tableaux(n, &params).map_err(|e| e.to_string())?;
            for (word, p) in solved.iter() {
                if p != counted.get(word) {
                    return Err(format!(
                        "state {word} at n = {n}: solver {p}, tableaux {}",
                        counted.get(word)
                    ));
                }
            }
        }
    }
    Ok(())
}

fn transfer_equivalence() -> Result<(), String> {
    let mut cache = ansatz::TransferCache::new();
    for n in 1..=5 {
        let by_type = tableaux::gf_all_types(n).map_err(|e| e.to_string())?;
        for word in ansatz::AnsatzWord::all(n) {
            let via_transfer = cache.wxv(&word);
            let via_enumeration = by_type[&word.type_word()].set_u_one();
            if via_transfer != via_enumeration {
                return Err(format!("word {word}: transfer and enumeration differ"));
            }
        }
    }
    Ok(())
}

fn matrix_ansatz() -> Result<(), String> {
    for report in ansatz::verify_gma(3).map_err(|e| e.to_string())? {
        if !report.is_ok() {
            return Err(format!("family {} failed: {report:?}", report.family));
        }
    }
    for report in ansatz::verify_identities(3).map_err(|e| e.to_string())? {
        if !report.is_ok() {
            return Err(format!("identity {} failed: {report:?}", report.family));
        }
    }
    let mut cache = ansatz::TransferCache::new();
    let worked = cache.entry(ansatz::Letter::E, 0, 2, 2, 0);
    let want = GfPoly::parse_text("b d^2").expect("static polynomial");
    if worked != want {
        return Err(format!("E entry (0,2,2,0) = {worked}, expected {want}"));
    }
    Ok(())
}

fn index_decrease() -> Result<(), String> {
    let report = ansatz::verify_decrease(4, 6).map_err(|e| e.to_string())?;
    if !report.is_ok() {
        return Err(format!("{report:?}"));
    }
    Ok(())
}

fn moment_pipelines() -> Result<(), String> {
    let zs = moments::z_polynomials(6).map_err(|e| e.to_string())?;
    for aw in moment_points() {
        let cmp = moments::compare_moments_with_z(6, &aw, &zs).map_err(|e| e.to_string())?;
        if !cmp.equal {
            return Err(format!(
                "pipelines disagree at {aw:?}: staircase {:?} vs motzkin {:?}",
                cmp.staircase, cmp.motzkin
            ));
        }
        if !cmp.bridge_ok {
            return Err(format!("binomial bridge fails at {aw:?}"));
        }
    }
    Ok(())
}

fn symmetries() -> Result<(), String> {
    for n in 1..=4 {
        match asep::check_symmetries(n).map_err(|e| e.to_string())? {
            asep::SymmetryCheck::Ok { .. } => {}
            asep::SymmetryCheck::Fail { identity, word } => {
                return Err(format!("{identity} identity fails at n = {n}, word {word}"));
            }
        }
    }
    Ok(())
}

fn physical_quantities() -> Result<(), String> {
    // Bond averages compare against the closed form at u = 1.
    let points: Vec<asep::AsepParams> = chain_points()
        .into_iter()
        .map(|mut p| {
            p.u = BigRational::one();
            p
        })
        .collect();
    for params in points {
        for n in 1..=5 {
            let closed = asep::current(n, &params).map_err(|e| e.to_string())?;
            let (num, den) = asep::current_symbolic(n).map_err(|e| e.to_string())?;
            let point = params.point();
            if num.eval(&point) != &closed * den.eval(&point) {
                return Err(format!("symbolic current pair disagrees at n = {n}"));
            }
            for bond in 1..n {
                let average =
                    asep::current_definitional(n, bond, &params).map_err(|e| e.to_string())?;
                if average != closed {
                    return Err(format!(
                        "bond {bond} average {average} != closed form {closed} at n = {n}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn bijection_families() -> Result<(), String> {
    for n in 1..=5 {
        let factorial: usize = (1..=n + 1).product();
        let staircases: Vec<_> = tableaux::enumerate(n)
            .map_err(|e| e.to_string())?
            .filter(|t| !t.contains_gamma_or_delta())
            .collect();
        let alts = bijections::enumerate_alternative(n);
        let perms = bijections::enumerate_permutation(n + 1);
        if staircases.len() != factorial || alts.len() != factorial || perms.len() != factorial {
            return Err(format!(
                "cardinalities at n = {n}: staircase {}, alternative {}, permutation {}, expected {factorial}",
                staircases.len(),
                alts.len(),
                perms.len()
            ));
        }
        for st in &staircases {
            let at = bijections::staircase_to_alt(st).map_err(|e| e.to_string())?;
            if bijections::alt_to_staircase(&at).map_err(|e| e.to_string())? != *st {
                return Err(format!("staircase roundtrip fails for\n{}", st.to_text()));
            }
        }
        for at in &alts {
            let st = bijections::alt_to_staircase(at).map_err(|e| e.to_string())?;
            if bijections::staircase_to_alt(&st).map_err(|e| e.to_string())? != *at {
                return Err(format!("alternative roundtrip fails for\n{}", at.to_text()));
            }
            let pt = bijections::alt_to_perm(at).map_err(|e| e.to_string())?;
            if bijections::perm_to_alt(&pt).map_err(|e| e.to_string())? != *at {
                return Err(format!("permutation roundtrip fails for\n{}", at.to_text()));
            }
        }
        for pt in &perms {
            let at = bijections::perm_to_alt(pt).map_err(|e| e.to_string())?;
            if bijections::alt_to_perm(&at).map_err(|e| e.to_string())? != *pt {
                return Err(format!("permutation roundtrip fails for\n{}", pt.to_text()));
            }
        }
    }
    Ok(())
}

fn homogeneity() -> Result<(), String> {
    for n in 1..=6 {
        let want = (n * (n + 1) / 2) as u32;
        for (index, t) in tableaux::enumerate(n).map_err(|e| e.to_string())?.enumerate() {
            let degree = t.weight().map_err(|e| e.to_string())?.degree();
            if degree != want {
                return Err(format!(
                    "tableau #{index} of size {n} has weight degree {degree}, expected {want}"
                ));
            }
        }
    }
    Ok(())
}

/// Run every criterion, calling `report` with (id, name, outcome) as each
/// one finishes. Returns the number of failures.
pub fn run_all(mut report: impl FnMut(usize, &str, &Result<(), String>)) -> usize {
    let mut failures = 0;
    for criterion in criteria() {
        let outcome = (criterion.run)();
        if outcome.is_err() {
            failures += 1;
        }
        report(criterion.id, criterion.name, &outcome);
    }
    failures
}
