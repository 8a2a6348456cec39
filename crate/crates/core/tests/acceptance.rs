//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (visible with `--nocapture`). Stated time budgets are asserted.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use loosecheck::{
    becker_schultz_constraint, corollary_sweep, decide_cp_tensor, decide_plane_bundle,
    decide_sphere_map, decide_stiefel, euler_grassmann, euler_schubert_oracle, in_stable_range,
    omega_class, refine, stiefel_dims, FgAbGroup, GroupElement, OrderKnowledge, Outcome,
    PlaneBundleInput, RuleId, SphereMapInput, StemTable,
};

fn budget(start: Instant, limit_ms: u64, what: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_millis(limit_ms),
        "{what} took {elapsed:?}, budget is {limit_ms} ms"
    );
}

#[test]
fn criterion_01_two_frames_always_loose() {
    let start = Instant::now();
    let rows = corollary_sweep(StemTable::bundled(), 2, 200).unwrap();
    assert_eq!(rows.first().unwrap().r, 3);
    assert_eq!(rows.last().unwrap().r, 200);
    for row in &rows {
        assert_eq!(row.verdict.outcome, Outcome::Loose, "r = {}", row.r);
        assert!(row.agrees(), "r = {}", row.r);
    }
    budget(start, 1000, "k = 2 sweep to r = 200");
    println!("acceptance criterion 1 (two frames always loose): PASS");
}

#[test]
fn criterion_02_three_frame_sweep_matches_closed_form() {
    let start = Instant::now();
    let rows = corollary_sweep(StemTable::bundled(), 3, 200).unwrap();
    assert_eq!(rows.first().unwrap().r, 4);
    assert_eq!(rows.last().unwrap().r, 200);
    for row in &rows {
        let closed_form =
            if row.r % 2 == 0 || row.r % 12 == 1 { Outcome::Loose } else { Outcome::NotLoose };
        assert_eq!(row.verdict.outcome, closed_form, "r = {}", row.r);
        assert_ne!(row.verdict.outcome, Outcome::Unknown, "r = {}", row.r);
        assert!(row.agrees(), "r = {}", row.r);
    }
    budget(start, 1000, "k = 3 sweep to r = 200");
    println!("acceptance criterion 2 (three-frame sweep matches closed form): PASS");
}

#[test]
fn criterion_03_five_frame_sweep_with_excluded_pair() {
    let start = Instant::now();
    let rows = corollary_sweep(StemTable::bundled(), 5, 200).unwrap();
    assert_eq!(rows.first().unwrap().r, 6);
    assert_eq!(rows.last().unwrap().r, 200);
    for row in &rows {
        let closed_form = if row.r == 7 {
            Outcome::Unknown // r = 7 sits outside the closed form's hypotheses
        } else if row.r % 6 == 5 {
            Outcome::NotLoose
        } else {
            Outcome::Loose
        };
        assert_eq!(row.verdict.outcome, closed_form, "r = {}", row.r);
        assert!(row.agrees(), "r = {}", row.r);
    }
    budget(start, 1000, "k = 5 sweep to r = 200");
    println!("acceptance criterion 3 (five-frame sweep, r = 7 honestly unknown): PASS");
}

#[test]
fn criterion_04_sufficient_conditions_force_loose() {
    let start = Instant::now();
    let table = StemTable::bundled();
    let twelve = BigInt::from(12);
    let mut hits = 0usize;
    for k in 2..=12i64 {
        for r in (2 * k)..=60 {
            let dims = stiefel_dims(r, k).unwrap();
            let sufficient = k % 2 == 0 || k == 7 || k == 9 || (&dims.chi % &twelve).is_zero();
            if !sufficient {
                continue;
            }
            hits += 1;
            let v = decide_stiefel(table, r, k, false).unwrap();
            assert_eq!(v.outcome, Outcome::Loose, "r = {r}, k = {k}");
        }
    }
    assert!(hits > 200, "the sufficiency grid should be well populated; got {hits}");
    budget(start, 1000, "sufficiency grid 2 <= k <= 12, 2k <= r <= 60");
    println!("acceptance criterion 4 (sufficient conditions force loose): PASS");
}

#[test]
fn criterion_05_euler_closed_form_matches_cell_count_oracle() {
    let start = Instant::now();
    for r in 1..=30i64 {
        for k in 1..=r {
            let closed = euler_grassmann(r, k, false).unwrap();
            let oracle = euler_schubert_oracle(r, k).unwrap();
            assert_eq!(closed, oracle, "r = {r}, k = {k}");
        }
    }
    budget(start, 1000, "Euler characteristic cross-check to r = 30");
    println!("acceptance criterion 5 (closed-form Euler equals signed cell count): PASS");
}

#[test]
fn criterion_06_stable_range_inequality_restates_definition() {
    for k in 2..=100i64 {
        for r in (k + 1)..=100 {
            let dims = stiefel_dims(r, k).unwrap();
            let by_definition = dims.m < 2 * dims.n - 2;
            assert_eq!(in_stable_range(r, k).unwrap(), by_definition, "r = {r}, k = {k}");
            assert_eq!(dims.stable_range, by_definition, "r = {r}, k = {k}");
        }
    }
    println!("acceptance criterion 6 (stable-range inequality restates m < 2n - 2): PASS");
}

#[test]
fn criterion_07_low_dimensional_pairs_use_the_recorded_rules() {
    let table = StemTable::bundled();
    for (r, k) in [(3i64, 2i64), (4, 3), (6, 5), (8, 5)] {
        let v = decide_stiefel(table, r, k, false).unwrap();
        assert_eq!(v.outcome, Outcome::Loose, "({r}, {k})");
        assert_eq!(
            v.deciding_rule().rule,
            RuleId::StiefelTangentSection,
            "({r}, {k}) should be settled by the tangent-section rule"
        );
    }
    let v = decide_stiefel(table, 9, 5, false).unwrap();
    assert_eq!(v.outcome, Outcome::Loose);
    let last = v.deciding_rule();
    assert_eq!(last.rule, RuleId::StiefelPair95);
    assert_eq!(last.computed["chi"], "6");
    assert_eq!(last.computed["2chi"], "12");
    println!("acceptance criterion 7 (special low-dimensional pairs): PASS");
}

#[test]
fn criterion_08_projective_tensor_grid_agrees_both_ways() {
    let start = Instant::now();
    for q in 2..=50i64 {
        for t in 1..=20i64 {
            let qq = BigInt::from(q);
            let tt = BigInt::from(t);
            let v = decide_cp_tensor(&qq, &tt).unwrap();
            // never Unknown: the plane-bundle criterion is two-sided
            assert_ne!(v.outcome, Outcome::Unknown, "q = {q}, t = {t}");

            // route 1: the stated divisibility biconditional
            let direct = (q + 1) % t == 0 && q % 2 == 1;
            let expected = if direct { Outcome::Loose } else { Outcome::NotLoose };
            assert_eq!(v.outcome, expected, "q = {q}, t = {t}");

            // route 2: hand the underlying sphere bundle to the general engine
            let bundle =
                PlaneBundleInput::new(BigInt::from(q + 1), vec![tt.clone()], vec![], 2 * q)
                    .unwrap();
            assert_eq!(decide_plane_bundle(&bundle).outcome, v.outcome, "q = {q}, t = {t}");
        }
    }
    budget(start, 1000, "projective tensor grid q <= 50, t <= 20");
    println!("acceptance criterion 8 (projective tensor grid, both routes agree): PASS");
}

#[test]
fn criterion_09_even_frame_orders_are_pinned_to_two() {
    let table = StemTable::bundled();
    table.audit().unwrap();
    let even_sphere = becker_schultz_constraint(&BigInt::from(2)).unwrap();
    assert_eq!(even_sphere, OrderKnowledge::divides(2));
    for k in (2..=24i64).step_by(2) {
        let know = table.so_class_order(k).unwrap();
        let combined = refine(&even_sphere, &know).unwrap();
        match combined {
            OrderKnowledge::Exact(ref n) => {
                assert!(
                    n == &1u32.into() || n == &2u32.into(),
                    "k = {k}: exact order {n} should divide 2"
                );
            }
            OrderKnowledge::Divides(ref n) => {
                assert_eq!(n, &2u32.into(), "k = {k}: expected divides 2, got {combined}");
            }
        }
    }
    println!("acceptance criterion 9 (even frame counts pinned to order <= 2): PASS");
}

fn enumerate_classes(group: &FgAbGroup) -> Vec<GroupElement> {
    // all elements of a finite group; a -50..50 slice of each free factor
    let mut coords_sets: Vec<Vec<BigInt>> = Vec::new();
    for order in group.orders() {
        if order.is_zero() {
            coords_sets.push((-50..50i64).map(BigInt::from).collect());
        } else {
            let n: i64 = order.try_into().expect("table orders fit in i64");
            coords_sets.push((0..n).map(BigInt::from).collect());
        }
    }
    let mut out: Vec<Vec<BigInt>> = vec![vec![]];
    for set in &coords_sets {
        let mut next = Vec::with_capacity(out.len() * set.len());
        for prefix in &out {
            for value in set {
                let mut row = prefix.clone();
                row.push(value.clone());
                next.push(row);
            }
        }
        out = next;
    }
    out.into_iter().map(|c| group.element(c).unwrap()).collect()
}

#[test]
fn criterion_10_obstruction_is_a_homomorphism_and_decides_spheres() {
    let start = Instant::now();
    let table = StemTable::bundled();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6c6f6f7365);

    for stem in 0..=15i64 {
        // even target dimension so the scaling by chi = 2 is nontrivial
        let n = if stem % 2 == 0 { stem + 4 } else { stem + 5 };
        let m = n + stem;
        let group = table.stem_group(stem).unwrap().clone();
        let rank = group.orders().len();
        for _ in 0..1000 {
            let a: Vec<BigInt> =
                (0..rank).map(|_| BigInt::from(rng.gen_range(-1000i64..=1000))).collect();
            let b: Vec<BigInt> =
                (0..rank).map(|_| BigInt::from(rng.gen_range(-1000i64..=1000))).collect();
            let ea = SphereMapInput::for_sphere_target(table, m, n, a.clone()).unwrap();
            let eb = SphereMapInput::for_sphere_target(table, m, n, b.clone()).unwrap();
            let sum_coords: Vec<BigInt> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            let esum = SphereMapInput::for_sphere_target(table, m, n, sum_coords).unwrap();
            let lhs = omega_class(&esum);
            let rhs = omega_class(&ea).add(&omega_class(&eb)).unwrap();
            assert_eq!(lhs, rhs, "stem {stem}: omega(a + b) != omega(a) + omega(b)");
        }

        // odd target dimension within the stable range: everything is loose
        let n_odd = if stem % 2 == 0 { stem + 5 } else { stem + 6 };
        let m_odd = n_odd + stem;
        assert!(m_odd < 2 * n_odd - 2, "stem {stem}: chosen pair must be stable");
        for class in enumerate_classes(&group) {
            let input =
                SphereMapInput::for_sphere_target(table, m_odd, n_odd, class.coords().to_vec())
                    .unwrap();
            let v = decide_sphere_map(&input);
            assert_eq!(v.outcome, Outcome::Loose, "stem {stem}, class {class}");
        }
    }

    // the identity of an even sphere can never be pushed off itself
    let identity = SphereMapInput::for_sphere_target(table, 4, 4, vec![BigInt::from(1)]).unwrap();
    let v = decide_sphere_map(&identity);
    assert_eq!(v.outcome, Outcome::NotLoose);
    assert_eq!(v.deciding_rule().rule, RuleId::SphereObstructionNonzero);

    budget(start, 1000, "sphere-map criterion batch");
    println!("acceptance criterion 10 (obstruction homomorphism and sphere verdicts): PASS");
}
