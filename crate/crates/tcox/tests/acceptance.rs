//! End-to-end acceptance suite: one test per criterion, each printing a
//! pass line and holding the stated exactness and time bounds. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::{Duration, Instant};
use tcox::catalog::{FAN_2D4, FAN_COTANGENT_P2, OW_2D4};
use tcox::cox_pipeline::{
    canonical_class, class_group_from_fan, cox_ring, fiber_grading, from_fan, ComplexityOneData,
    DLabel,
};
use tcox::intlinalg::{snf, syz2, trinomial_syzygies, FGAbelianGroup, IntMatrix};
use tcox::io::{parse_input, JobSpec};
use tcox::orlik_wagreich::{
    arm_isotropy, continuants, continued_fraction_value, contract, contracted_slots, graph_data,
    resolution_cox, ContractionSpec,
};
use tcox::pdiv::DivisorialFanP1;
use tcox::polyhedra::{Cone, SigmaPolyhedron};
use tcox::presentation::same_row_space;
use tcox::projline::P1Point;
use tcox::{Int, Rat};

fn q(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

fn qq(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

fn fan_fixture(json: &str) -> DivisorialFanP1 {
    match parse_input(json.as_bytes()).unwrap() {
        JobSpec::Fan(f) => f.to_fan().unwrap(),
        _ => panic!("fixture is not a fan"),
    }
}

fn pass(criterion: &str, started: Instant, bound: Option<Duration>) {
    let elapsed = started.elapsed();
    if let Some(b) = bound {
        assert!(elapsed < b, "{criterion}: {elapsed:?} exceeded the {b:?} bound");
    }
    println!("acceptance {criterion}: PASS ({elapsed:.2?})");
}

#[test]
fn criterion_1_two_d4_fan_route() {
    let started = Instant::now();
    let fan = fan_fixture(FAN_2D4);
    let report = fan.check_fan();
    assert!(report.valid && report.complete);

    let class = class_group_from_fan(&fan).unwrap();
    // the published five-by-six relation matrix, in the documented order
    let expected = IntMatrix::from_i64(&[
        &[-1, 1, 1, 0, 0, 0],
        &[-1, 0, 0, 2, 0, 0],
        &[-1, 0, 0, 0, 2, 0],
        &[-1, 0, 0, 0, 0, 2],
        &[0, -2, -1, 1, 1, 1],
    ]);
    assert_eq!(class.matrix, expected);

    let s = snf(&class.matrix);
    assert_eq!(
        s.invariant_factors,
        vec![Int::one(), Int::one(), Int::one(), Int::from(2), Int::from(2)]
    );
    assert_eq!(class.grading.group, FGAbelianGroup::new(1, vec![Int::from(2), Int::from(2)]));

    // exact degree map; the published coordinates are reached through the
    // recorded unimodular identification (n, t1, t2) -> (n, t1, t2 + n)
    let published = [(1, 1, 0), (1, 1, 0), (1, 1, 1), (1, 0, 0), (1, 0, 1)];
    for (idx, (pf, pt1, pt2)) in published.iter().enumerate() {
        let d = class.grading.degree_of(&format!("T{}", idx + 1)).unwrap();
        let n: i64 = d.free_part()[0].to_string().parse().unwrap();
        let t1: i64 = d.torsion_part()[0].to_string().parse().unwrap();
        let t2: i64 = d.torsion_part()[1].to_string().parse().unwrap();
        assert_eq!((n, t1, (t2 + n).rem_euclid(2)), (*pf, *pt1, *pt2), "degree of T{}", idx + 1);
    }

    // two relations with the published coefficient row space
    let (data, _) = from_fan(&fan).unwrap();
    let pres = cox_ring(&data, &class.grading).unwrap();
    assert_eq!(pres.relations.len(), 2);
    let matrix = pres.coefficient_matrix(&data.slot_monomials()).unwrap();
    let rows = vec![vec![q(1), q(1), q(1), q(0)], vec![q(0), qq(1, 2), q(1), q(1)]];
    assert!(same_row_space(&matrix, &rows));
    assert!(pres.is_homogeneous().unwrap());

    pass("1 (degree-one surface, fan route)", started, Some(Duration::from_secs(1)));
}

#[test]
fn criterion_2_cotangent_plane_fan_route() {
    let started = Instant::now();
    let fan = fan_fixture(FAN_COTANGENT_P2);
    let report = fan.check_fan();
    assert!(report.valid && report.complete);

    let class = class_group_from_fan(&fan).unwrap();
    assert_eq!(class.grading.group, FGAbelianGroup::free(2));

    let (data, _) = from_fan(&fan).unwrap();
    let pres = cox_ring(&data, &class.grading).unwrap();
    assert_eq!(pres.generators.len(), 6);
    assert_eq!(pres.relations.len(), 1);
    assert_eq!(tcox::klyachko::degree_class_sizes(&pres), vec![3, 3]);
    let matrix = pres.coefficient_matrix(&data.slot_monomials()).unwrap();
    assert!(same_row_space(&matrix, &[vec![q(1), q(1), q(1)]]));

    pass("2 (cotangent plane, fan route)", started, Some(Duration::from_secs(1)));
}

#[test]
fn criterion_3_orlik_wagreich_route() {
    let started = Instant::now();
    let JobSpec::Owgraph(file) = parse_input(OW_2D4.as_bytes()).unwrap() else {
        panic!("fixture is not a graph");
    };
    let graph = file.to_graph().unwrap();
    let pres = resolution_cox(&graph).unwrap();
    assert_eq!(pres.generators.len(), 13);
    assert_eq!(pres.relations.len(), 2);

    let data = graph_data(&graph).unwrap();
    let patterns: Vec<Vec<u64>> = data
        .arms
        .iter()
        .map(|arm| arm.iter().map(|d| d.isotropy.to_string().parse().unwrap()).collect())
        .collect();
    assert_eq!(patterns, vec![vec![1, 1], vec![1, 2, 1], vec![1, 2, 1], vec![1, 2, 1]]);

    // contraction reproduces the fan-route relations up to renaming
    let spec = ContractionSpec { exceptional_labels: file.contract.clone() };
    let contracted = contract(&pres, &spec).unwrap();
    let slots = contracted_slots(&data, &spec);
    let matrix = contracted.coefficient_matrix(&slots).unwrap();

    let fan = fan_fixture(FAN_2D4);
    let class = class_group_from_fan(&fan).unwrap();
    let (fan_data, _) = from_fan(&fan).unwrap();
    let fan_pres = cox_ring(&fan_data, &class.grading).unwrap();
    let fan_matrix = fan_pres.coefficient_matrix(&fan_data.slot_monomials()).unwrap();
    assert!(same_row_space(&matrix, &fan_matrix));
    // the renaming pairs off slot monomials with equal exponent multisets
    for (a, b) in slots.iter().zip(&fan_data.slot_monomials()) {
        let mut ea: Vec<u32> = a.exponents().map(|(_, e)| *e).collect();
        let mut eb: Vec<u32> = b.exponents().map(|(_, e)| *e).collect();
        ea.sort();
        eb.sort();
        assert_eq!(ea, eb);
    }

    pass("3 (resolution graph route and contraction)", started, None);
}

/// Exact fraction on machine words, independent of the crate's rational
/// type: the direct continued-fraction oracle.
#[derive(Clone, Copy)]
struct Frac {
    num: i128,
    den: i128,
}

fn direct_cf(b: &[i64]) -> Option<Frac> {
    let mut val: Option<Frac> = None;
    for &bj in b.iter().rev() {
        val = Some(match val {
            None => Frac { num: bj as i128, den: 1 },
            Some(f) => {
                if f.num == 0 {
                    return None; // pole
                }
                // bj - den/num
                Frac { num: bj as i128 * f.num - f.den, den: f.num }
            }
        });
    }
    val.map(|f| {
        let g = gcd_i128(f.num.abs(), f.den.abs());
        let sign = if f.den < 0 { -1 } else { 1 };
        Frac { num: sign * f.num / g, den: sign * f.den / g }
    })
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.max(1)
    } else {
        gcd_i128(b, a % b)
    }
}

#[test]
fn criterion_4_continued_fractions() {
    let started = Instant::now();
    // the table identity: the prefix (2,2,2,2) pins the first five orders
    assert_eq!(
        continuants(&[2, 2, 2, 2]),
        vec![Int::from(1), Int::from(2), Int::from(3), Int::from(4), Int::from(5)]
    );
    assert_eq!(
        arm_isotropy(&[2, 2, 2, 2, 1]).unwrap(),
        vec![Int::from(1), Int::from(2), Int::from(3), Int::from(4), Int::from(5)]
    );
    assert_eq!(
        arm_isotropy(&[2, 1, 2]).unwrap(),
        vec![Int::from(1), Int::from(2), Int::from(1)]
    );
    assert_eq!(arm_isotropy(&[1, 1]).unwrap(), vec![Int::from(1), Int::from(1)]);

    // recurrence equals direct exact evaluation on every prefix arising
    // from sequences in [1,6] of length at most eight
    let mut checked = 0u64;
    let mut stack: Vec<i64> = Vec::new();
    fn walk(stack: &mut Vec<i64>, checked: &mut u64) {
        let all = continuants(stack);
        let l_next = all.last().unwrap().clone();
        if let Some(f) = direct_cf(stack) {
            let direct = BigInt::from(f.num);
            assert_eq!(direct.abs(), l_next.abs(), "prefix {stack:?}");
            // signs agree whenever the denominator continuant is positive
            if stack.len() >= 2 {
                let den = continuants(&stack[1..])[stack.len() - 1].clone();
                if den.is_positive() {
                    assert_eq!(direct, l_next, "prefix {stack:?}");
                }
            } else {
                assert_eq!(direct, l_next, "prefix {stack:?}");
            }
            // interoperability with the crate's own rational evaluation
            if *checked % 9973 == 0 {
                if let Some(v) = continued_fraction_value(stack) {
                    assert_eq!(v.numer(), &BigInt::from(f.num));
                    assert_eq!(v.denom(), &BigInt::from(f.den));
                }
            }
        }
        *checked += 1;
        // prefixes of length up to seven feed arms of length up to eight
        if stack.len() < 7 {
            for b in 1..=6 {
                stack.push(b);
                walk(stack, checked);
                stack.pop();
            }
        }
    }
    walk(&mut stack, &mut checked);
    assert_eq!(checked, 1 + 6 + 36 + 216 + 1296 + 7776 + 46656 + 279936);

    pass("4 (continued fractions, exhaustive)", started, Some(Duration::from_secs(5)));
}

#[test]
fn criterion_5_tangent_plane_filtrations() {
    let started = Instant::now();
    let JobSpec::Bundle(file) =
        parse_input(tcox::catalog::BUNDLE_TANGENT_P2.as_bytes()).unwrap()
    else {
        panic!("fixture is not bundle data");
    };
    let data = file.to_data().unwrap();
    let out = tcox::klyachko::projectivization_cox(&data, true).unwrap();
    let p = &out.presentation;
    assert_eq!(p.generators.len(), 6);
    assert_eq!(p.relations.len(), 1);
    // the three-term pattern: each monomial is one S times one T
    let rel = &p.relations[0];
    assert_eq!(rel.num_terms(), 3);
    for (m, _) in rel.terms() {
        assert_eq!(m.total_degree(), 2);
        let s_count: u32 = m
            .exponents()
            .filter(|(l, _)| l.starts_with('S'))
            .map(|(_, e)| *e)
            .sum();
        assert_eq!(s_count, 1);
    }
    assert_eq!(p.grading.as_ref().unwrap().free_rank, 2);
    assert_eq!(tcox::klyachko::degree_class_sizes(p), vec![3, 3]);

    pass("5 (tangent sheaf of the plane)", started, None);
}

#[test]
fn criterion_6_graded_piece_oracle() {
    let started = Instant::now();
    // the affine 3-space example with the weight action
    // t . z = (t1^-1 t2 z1, t1 z2, t2 z3)
    let sigma = Cone::from_generators(2, &[vec![q(1), q(1)], vec![q(0), q(1)]]);
    let d0 = SigmaPolyhedron::from_points_and_tail(2, &[vec![q(0), q(1)]], &sigma).unwrap();
    let dinf = SigmaPolyhedron::from_points_and_tail(
        2,
        &[vec![q(0), q(0)], vec![q(1), q(0)]],
        &sigma,
    )
    .unwrap();
    let divisor = tcox::pdiv::PolyhedralDivisorP1::new(
        2,
        sigma,
        vec![(P1Point::from_ints(0, 1), d0), (P1Point::from_ints(1, 0), dinf)],
    )
    .unwrap();

    // brute-force monomial count: z1^a z2^b z3^c has weight (b - a, a + c)
    let count = |u1: i64, u2: i64| -> Int {
        let mut n = 0;
        for a in 0..=20 {
            let b = u1 + a;
            let c = u2 - a;
            if b >= 0 && c >= 0 {
                n += 1;
            }
        }
        Int::from(n)
    };
    for u1 in -5i64..=5 {
        for u2 in -5i64..=5 {
            let in_dual = u1 + u2 >= 0 && u2 >= 0;
            let u = vec![q(u1), q(u2)];
            if in_dual {
                assert_eq!(divisor.graded_piece_dim(&u).unwrap(), count(u1, u2), "u = ({u1},{u2})");
            } else {
                assert!(divisor.graded_piece_dim(&u).is_err());
            }
        }
    }

    pass("6 (graded pieces against monomial counting)", started, Some(Duration::from_secs(2)));
}

fn random_matrix(rng: &mut StdRng) -> IntMatrix {
    let rows = rng.random_range(1..=6);
    let cols = rng.random_range(1..=6);
    let data: Vec<Vec<Int>> = (0..rows)
        .map(|_| (0..cols).map(|_| Int::from(rng.random_range(-10i64..=10))).collect())
        .collect();
    IntMatrix::from_rows(data)
}

/// gcd of all k x k minors: the classical invariant-factor oracle.
fn minor_gcd_factors(a: &IntMatrix) -> Vec<Int> {
    fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = combos(n - 1, k);
        for mut c in combos(n - 1, k - 1) {
            c.push(n - 1);
            out.push(c);
        }
        out
    }
    let mut factors = Vec::new();
    let mut prev = Int::one();
    for k in 1..=a.rows().min(a.cols()) {
        let mut g = Int::zero();
        for rs in combos(a.rows(), k) {
            for cs in combos(a.cols(), k) {
                let sub = IntMatrix::from_rows(
                    rs.iter().map(|&i| cs.iter().map(|&j| a[(i, j)].clone()).collect()).collect(),
                );
                g = g.gcd(&sub.det());
            }
        }
        if g.is_zero() {
            break;
        }
        factors.push(&g / &prev);
        prev = g;
    }
    factors
}

fn random_data(rng: &mut StdRng) -> (ComplexityOneData, Vec<P1Point>) {
    let r_plus_1 = rng.random_range(3..=6);
    let mut points = Vec::new();
    let mut values: Vec<(i64, i64)> = Vec::new();
    while points.len() < r_plus_1 {
        let b = rng.random_range(-6i64..=6);
        let c = rng.random_range(1i64..=4);
        if values.iter().all(|(pb, pc)| pb * c != b * pc) {
            values.push((b, c));
            points.push(P1Point::new(q(b), q(c)).unwrap());
        }
    }
    let mut t = 0;
    let arms: Vec<Vec<DLabel>> = (0..r_plus_1)
        .map(|_| {
            (0..rng.random_range(1..=3))
                .map(|_| {
                    t += 1;
                    DLabel {
                        label: format!("T{t}"),
                        isotropy: Int::from(rng.random_range(1i64..=4)),
                    }
                })
                .collect()
        })
        .collect();
    let e_labels: Vec<String> =
        (0..rng.random_range(0..=2)).map(|k| format!("S{}", k + 1)).collect();
    let data = ComplexityOneData::new(points.clone(), arms, e_labels).unwrap();
    (data, points)
}

#[test]
fn criterion_7_property_suite() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed_1234);

    // normal form invariants with the minor-gcd oracle
    for _ in 0..200 {
        let a = random_matrix(&mut rng);
        let res = snf(&a);
        assert_eq!(res.u.mul(&a).mul(&res.v), res.s);
        assert!(res.s.is_diagonal());
        assert_eq!(res.u.det().abs(), Int::one());
        assert_eq!(res.v.det().abs(), Int::one());
        for w in res.invariant_factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        assert_eq!(res.invariant_factors, minor_gcd_factors(&a));
    }

    // random valid complexity-one data sets
    for _ in 0..50 {
        let (data, points) = random_data(&mut rng);
        let grading = fiber_grading(&data);
        let pres = cox_ring(&data, &grading).unwrap();
        assert!(pres.is_homogeneous().unwrap(), "homogeneity");

        // complete-intersection dimension m + sum n_i - r + 1
        let m = data.e_labels.len() as i64;
        let total: i64 = data.arms.iter().map(|a| a.len() as i64).sum();
        let r = data.points.len() as i64 - 1;
        assert_eq!(pres.ci_dimension(), m + total - r + 1);

        // canonical class does not depend on the arm choice
        let k0 = canonical_class(&data, &grading, 0).unwrap();
        for i in 1..data.arms.len() {
            assert_eq!(k0, canonical_class(&data, &grading, i).unwrap());
        }

        // every emitted syzygy has at least three nonzero entries and
        // annihilates the representatives; the trinomial rows span the
        // full syzygy space
        let reps: Vec<(Rat, Rat)> = points
            .iter()
            .map(|p| {
                let (b, c) = p.representative();
                (b.clone(), c.clone())
            })
            .collect();
        let tri = trinomial_syzygies(&points).unwrap();
        let basis = syz2(&reps).unwrap();
        for row in &tri {
            assert!(row.iter().filter(|c| !c.is_zero()).count() >= 3);
            assert!(tcox::cox_pipeline::relation_annihilates_points(row, &points));
        }
        let basis_rows: Vec<Vec<Rat>> = basis
            .iter()
            .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        for row in &basis_rows {
            assert!(row.iter().filter(|c| !c.is_zero()).count() >= 3);
            assert!(tcox::cox_pipeline::relation_annihilates_points(row, &points));
        }
        assert!(same_row_space(&tri, &basis_rows));
    }

    pass("7 (randomized property suite)", started, Some(Duration::from_secs(30)));
}

#[test]
fn criterion_8_cross_pipeline_consistency() {
    let started = Instant::now();

    // fan route versus graph route on the degree-one surface
    let fan = fan_fixture(FAN_2D4);
    let class = class_group_from_fan(&fan).unwrap();
    let (fan_data, _) = from_fan(&fan).unwrap();
    let fan_pres = cox_ring(&fan_data, &class.grading).unwrap();
    let fan_matrix = fan_pres.coefficient_matrix(&fan_data.slot_monomials()).unwrap();

    let JobSpec::Owgraph(file) = parse_input(OW_2D4.as_bytes()).unwrap() else { unreachable!() };
    let graph = file.to_graph().unwrap();
    let ow_pres = resolution_cox(&graph).unwrap();
    let ow_data = graph_data(&graph).unwrap();
    let spec = ContractionSpec { exceptional_labels: file.contract.clone() };
    let contracted = contract(&ow_pres, &spec).unwrap();
    let ow_matrix =
        contracted.coefficient_matrix(&contracted_slots(&ow_data, &spec)).unwrap();
    assert!(same_row_space(&fan_matrix, &ow_matrix));

    // fan route versus filtration route on the plane pair
    let cfan = fan_fixture(FAN_COTANGENT_P2);
    let cclass = class_group_from_fan(&cfan).unwrap();
    let (cdata, _) = from_fan(&cfan).unwrap();
    let cpres = cox_ring(&cdata, &cclass.grading).unwrap();
    let cmatrix = cpres.coefficient_matrix(&cdata.slot_monomials()).unwrap();

    let JobSpec::Bundle(bfile) =
        parse_input(tcox::catalog::BUNDLE_TANGENT_P2.as_bytes()).unwrap()
    else {
        unreachable!()
    };
    let bout =
        tcox::klyachko::projectivization_cox(&bfile.to_data().unwrap(), true).unwrap();
    let bmatrix =
        bout.presentation.coefficient_matrix(&bout.data.slot_monomials()).unwrap();
    assert!(same_row_space(&cmatrix, &bmatrix));

    // isomorphic grading data: free rank two, split three and three, and
    // each slot takes one generator from each class
    for (pres, data) in
        [(&cpres, &cdata), (&bout.presentation, &bout.data)]
    {
        assert_eq!(pres.grading.as_ref().unwrap().free_rank, 2);
        assert_eq!(tcox::klyachko::degree_class_sizes(pres), vec![3, 3]);
        for slot in data.slot_monomials() {
            let degs: Vec<String> = slot
                .exponents()
                .map(|(l, _)| format!("{}", pres.generator(l).unwrap().degree.as_ref().unwrap()))
                .collect();
            assert_eq!(degs.len(), 2);
            assert_ne!(degs[0], degs[1]);
        }
    }

    // the cotangent-ray route agrees as well
    let JobSpec::Cotangent(cf) = parse_input(tcox::catalog::COTANGENT_P2.as_bytes()).unwrap()
    else {
        unreachable!()
    };
    let cout = tcox::klyachko::cotangent_cox(&cf.to_rays().unwrap()).unwrap();
    let cmatrix2 =
        cout.presentation.coefficient_matrix(&cout.data.slot_monomials()).unwrap();
    assert!(same_row_space(&cmatrix, &cmatrix2));

    pass("8 (cross-pipeline consistency)", started, None);
}

#[test]
fn catalog_verifies_within_budget() {
    let started = Instant::now();
    let results = tcox::catalog::verify_catalog();
    for r in &results {
        assert!(r.outcome.is_ok(), "{}: {:?}", r.name, r.outcome);
    }
    pass("catalog (full fixture verification)", started, Some(Duration::from_secs(10)));
}

/// Degrees of the contracted model cannot be recovered from the graph
/// route; the fan route supplies them. Both routes name the same number of
/// surviving generators.
#[test]
fn contracted_model_is_ungraded_by_design() {
    let JobSpec::Owgraph(file) = parse_input(OW_2D4.as_bytes()).unwrap() else { unreachable!() };
    let graph = file.to_graph().unwrap();
    let pres = resolution_cox(&graph).unwrap();
    let contracted = contract(
        &pres,
        &ContractionSpec { exceptional_labels: file.contract.clone() },
    )
    .unwrap();
    assert_eq!(contracted.status, tcox::presentation::GradingStatus::Ungraded);
    assert_eq!(contracted.generators.len(), 5);
}
