use quadform::formula::to_json;
use quadform::hopf::{hopf_admissible, HopfTriple};
use quadform::search::{hopf_consistency_sweep, search, to_json_lines, CellStatus, SearchOptions, SearchProblem};

fn run(r: usize, s: usize, n: usize, canonical: bool) -> Vec<String> {
    let opts = SearchOptions { canonical_first_matrix: canonical, ..SearchOptions::default() };
    let out = search(&SearchProblem::new(r, s, n, 3).with_options(opts)).unwrap();
    assert!(out.exhausted);
    out.formulas.iter().map(to_json).collect()
}

#[test]
fn uncanonical_search_contains_canonical_results() {
    for (r, s, n) in [(1, 1, 1), (1, 2, 2), (2, 2, 2)] {
        let canon = run(r, s, n, true);
        let full = run(r, s, n, false);
        assert!(!canon.is_empty());
        assert!(full.len() > canon.len(), "[{r},{s},{n}]");
        for f in &canon {
            assert!(full.contains(f), "[{r},{s},{n}] misses {f}");
        }
    }
}

#[test]
fn emitted_formulas_verify_both_ways() {
    for (r, s, n, p) in [(2, 2, 2, 5), (2, 3, 4, 3), (3, 3, 4, 3), (1, 3, 3, 7)] {
        let opts = SearchOptions { max_solutions: Some(20), ..SearchOptions::default() };
        let out = search(&SearchProblem::new(r, s, n, p).with_options(opts)).unwrap();
        assert!(!out.formulas.is_empty(), "[{r},{s},{n}] over GF({p})");
        for f in &out.formulas {
            assert!(f.verify_by_expansion());
            assert!(f.verify_by_hurwitz().unwrap());
        }
    }
}

#[test]
fn results_are_sorted_and_deterministic() {
    let prob = SearchProblem::new(2, 2, 3, 5);
    let a = search(&prob).unwrap();
    let b = search(&prob).unwrap();
    let keys: Vec<String> = a.formulas.iter().map(to_json).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(to_json_lines(&a.formulas), to_json_lines(&b.formulas));
    assert_eq!(to_json_lines(&a.formulas).lines().count(), a.formulas.len());
}

#[test]
fn nonexistence_only_when_inadmissible_here() {
    for (r, s, n) in [(2, 3, 3), (3, 3, 3), (3, 2, 3)] {
        assert!(!hopf_admissible(HopfTriple::new(r as u64, s as u64, n as u64)));
        let out = search(&SearchProblem::new(r, s, n, 3)).unwrap();
        assert!(out.exhausted && out.formulas.is_empty());
    }
}

#[test]
fn sweep_reports_every_cell() {
    let rep = hopf_consistency_sweep(3, 3, 4, 5).unwrap();
    assert_eq!(rep.violations, 0);
    let csv = rep.to_csv();
    assert_eq!(csv.lines().count(), rep.cells.len() + 1);
    assert!(csv.contains("2,3,3,5,consistent-empty"));
    assert_eq!(rep.cell(3, 3, 4).unwrap().status, CellStatus::Found);
}
