//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`).

use std::time::Instant;

use asep_tableaux::selftest;

fn run(id: usize) {
    let criterion = selftest::criteria()
        .into_iter()
        .find(|c| c.id == id)
        .expect("criterion id");
    let start = Instant::now();
    let outcome = (criterion.run)();
    let elapsed = start.elapsed();
    match &outcome {
        Ok(()) => println!(
            "criterion {:2} [{}] PASS ({:.2?})",
            criterion.id, criterion.name, elapsed
        ),
        Err(detail) => println!(
            "criterion {:2} [{}] FAIL ({:.2?}): {detail}",
            criterion.id, criterion.name, elapsed
        ),
    }
    outcome.unwrap_or_else(|detail| panic!("criterion {id} failed: {detail}"));
}

#[test]
fn criterion_01_cardinality() {
    run(1);
}

#[test]
fn criterion_02_worked_example() {
    run(2);
}

#[test]
fn criterion_03_stationary_equivalence() {
    run(3);
}

#[test]
fn criterion_04_transfer_equivalence() {
    run(4);
}

#[test]
fn criterion_05_matrix_ansatz() {
    run(5);
}

#[test]
fn criterion_06_index_decrease() {
    run(6);
}

#[test]
fn criterion_07_moment_pipelines() {
    run(7);
}

#[test]
fn criterion_08_symmetries() {
    run(8);
}

#[test]
fn criterion_09_physical_quantities() {
    run(9);
}

#[test]
fn criterion_10_bijections() {
    run(10);
}

#[test]
fn criterion_11_homogeneity() {
    run(11);
}
