//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with `cargo test --test acceptance -- --nocapture` to see
//! every line).
//!
//! Every expected number here is pinned exactly; there are no tolerances
//! anywhere in this file.

use dehn::bch::{bch_inverse, bch_product_to_degree, unipotent_matrix_oracle, verify_multicom};
use dehn::blowup::{blow_up, is_relatively_perfect_degree_zero, verify_blow_up};
use dehn::classify::{classify, obstruction_flags, Verdict};
use dehn::corpus;
use dehn::homology::{
    boundary_matrix, h2_degree_zero, hc1_pairing, killing_degree_zero, prop_six_check, wedge_basis,
    LaurentPoly,
};
use dehn::lie::{GradedLieAlgebra, Weight};
use dehn::rat::{rat, ratio, rational_power, Rational};
use dehn::stokes::{
    ball, gamma_integral_check, standard_integrands, stokes_integral, triangle_bound, ClosedPath,
    Gen, IntegrandVariant, NormModel, SolElement, SolModel,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

struct Criterion {
    number: u32,
    label: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(number: u32, label: &'static str) -> Self {
        Criterion {
            number,
            label,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl Into<String>) {
        if !ok {
            self.failures.push(detail.into());
        }
    }

    fn check_eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.failures
                .push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("criterion {:>2}: PASS — {}", self.number, self.label);
        } else {
            println!(
                "criterion {:>2}: FAIL — {} ({} problem(s))",
                self.number,
                self.label,
                self.failures.len()
            );
            for f in &self.failures {
                println!("    - {f}");
            }
            panic!(
                "criterion {} failed:\n{}",
                self.number,
                self.failures.join("\n")
            );
        }
    }
}

#[test]
fn criterion_01_abels_first_group() {
    let start = Instant::now();
    let mut c = Criterion::new(
        1,
        "first Abels fixture: trivial H2_0 and Kill_0, quadratic verdict",
    );
    let alg = corpus::abels_a4();
    let h2 = h2_degree_zero(&alg);
    let kill = killing_degree_zero(&alg);
    c.check_eq(h2.dim_h2_0, 0, "dim H2(u)_0");
    c.check_eq(kill.dim_kill_0, 0, "dim Kill(u)_0");
    c.check_eq(
        classify(&alg).unwrap().verdict,
        Verdict::Quadratic,
        "verdict",
    );
    let elapsed = start.elapsed();
    c.check(
        elapsed.as_secs_f64() < 1.0,
        format!("runtime {elapsed:?} exceeded 1 s"),
    );
    c.finish();
}

#[test]
fn criterion_02_abels_second_group() {
    let mut c = Criterion::new(
        2,
        "second Abels fixture: wedge dimensions, H2_0 = 0, Kill_0 = 1, cubic verdict",
    );
    let start = Instant::now();
    let alg = corpus::abels_2();
    let h2 = h2_degree_zero(&alg);
    let tame = dehn::homology::h2_tame_degree_zero(&alg);
    c.check_eq(h2.dim_lambda2_0, 4, "dim (g^g)_0");
    // Pinned at 5, but the four pinned dimensions cannot all hold at once:
    // (g^g)_0 = 4 together with three nonzero-weight wedge pairs forces a
    // 2-dimensional degree-zero part, and then the zero-degree triples
    // count 2 + 3*2 = 8. The fixture follows its defining construction
    // (triple brackets z1, z2 both survive at degree zero), so this
    // assertion records the discrepancy rather than hiding it.
    c.check_eq(h2.dim_lambda3_0, 5, "dim (g^g^g)_0");
    c.check_eq(tame.dim_lambda2_tame_0, 3, "dim (g_nz^g_nz)_0");
    c.check_eq(tame.dim_lambda3_tame_0, 2, "dim (g_nz^g_nz^g_nz)_0");
    c.check_eq(h2.dim_h2_0, 0, "dim H2_0");
    c.check_eq(killing_degree_zero(&alg).dim_kill_0, 1, "dim Kill_0");
    c.check_eq(
        classify(&alg).unwrap().verdict,
        Verdict::PolyAtMostCubic,
        "verdict",
    );
    let elapsed = start.elapsed();
    c.check(
        elapsed.as_secs_f64() < 1.0,
        format!("runtime {elapsed:?} exceeded 1 s"),
    );
    c.finish();
}

#[test]
fn criterion_03_sol_family() {
    let mut c = Criterion::new(
        3,
        "SOL family: homological obstruction exactly at ratio 1; p-adic verdicts",
    );
    for (lambda, expect) in [
        (rat(1), true),
        (rat(2), false),
        (rat(3), false),
        (ratio(1, 2), false),
        (ratio(5, 3), false),
    ] {
        let alg = corpus::sol_lambda(&lambda);
        let (flags, _, _) = obstruction_flags(&alg);
        c.check_eq(
            flags.homological,
            expect,
            &format!("homological obstruction at lambda = {lambda}"),
        );
    }
    c.check_eq(
        classify(&corpus::sol_padic(2, 3)).unwrap().verdict,
        Verdict::NotCompactlyPresented,
        "p-adic x p-adic SOL",
    );
    c.check_eq(
        classify(&corpus::sol_real_padic(2)).unwrap().verdict,
        Verdict::ExponentialDehn,
        "real x p-adic SOL",
    );
    c.finish();
}

#[test]
fn criterion_04_higher_sol() {
    let mut c = Criterion::new(4, "higher SOL: stably 2-tame, not tame, quadratic verdict");
    let alg = corpus::higher_sol();
    let (_, tflags, _) = obstruction_flags(&alg);
    c.check(tflags.stably_two_tame, "expected stably 2-tame");
    c.check(!tflags.tame, "expected not tame");
    c.check_eq(
        classify(&alg).unwrap().verdict,
        Verdict::Quadratic,
        "verdict",
    );
    c.finish();
}

#[test]
fn criterion_05_thirteen_dim_fixture() {
    let mut c = Criterion::new(
        5,
        "13-dim fixture: boundary checks pass on the algebra, fail on its radical; explicit d2/d3 entries",
    );
    let g = corpus::example_13dim();
    c.check(
        prop_six_check(&g),
        "expected tame cycles to bound in the full algebra",
    );
    let e = g
        .graded_subalgebra("e", &g.exponential_radical())
        .expect("radical is graded");
    c.check(
        !prop_six_check(&e),
        "expected a non-bounding tame cycle in the radical",
    );

    let zero = Weight::zero(2);
    let idx = |name: &str| g.index_of(name).unwrap();
    let b2 = wedge_basis(&g, 2, &zero, false);
    let b1: Vec<usize> = g.graded_component(&zero);
    let d2 = boundary_matrix(&g, 2, &zero);
    let pair_pos = |a: &str, b: &str| {
        let mut t = vec![idx(a), idx(b)];
        t.sort();
        b2.position(&t).unwrap()
    };
    // the four d2 values on the opposite-weight wedge pairs
    let d2_cases = [
        ("n13", "n35", Some(("n15", rat(-1)))),
        ("n13", "n36", None),
        ("n14", "n45", Some(("n15", rat(-1)))),
        ("n14", "n46", None),
    ];
    for (a, b, expect) in d2_cases {
        let col = pair_pos(a, b);
        for (row, &single) in b1.iter().enumerate() {
            let got = d2.get(row, col).clone();
            let want = match expect {
                Some((name, ref v)) if single == idx(name) => v.clone(),
                _ => Rational::zero(),
            };
            c.check_eq(
                got,
                want,
                &format!("d2({a}^{b}) at {}", g.basis[single].name),
            );
        }
    }

    // the four d3 values used to exhibit the cycles as boundaries
    let b3 = wedge_basis(&g, 3, &zero, false);
    let d3 = boundary_matrix(&g, 3, &zero);
    let triple_pos = |a: &str, b: &str, x: &str| {
        let mut t = vec![idx(a), idx(b), idx(x)];
        t.sort();
        b3.position(&t).unwrap()
    };
    // expected chains as (pair, coefficient) over the canonical pair basis,
    // starting from the identities
    //   d3(x12^x25^x56) = x56 ^ n15            = -(n15 ^ x56)
    //   d3(n13^n34^n45) = n13 ^ n35 - n14 ^ n45
    //   d3(n13^n35^x56) = x56 ^ n15 + n13 ^ n36
    //   d3(n14^n45^x56) = x56 ^ n15 + n14 ^ n46
    type Chain = Vec<(&'static str, &'static str, Rational)>;
    let d3_cases: [(&str, &str, &str, Chain); 4] = [
        ("x12", "x25", "x56", vec![("n15", "x56", rat(-1))]),
        (
            "n13",
            "n34",
            "n45",
            vec![("n13", "n35", rat(1)), ("n14", "n45", rat(-1))],
        ),
        (
            "n13",
            "n35",
            "x56",
            vec![("n15", "x56", rat(-1)), ("n13", "n36", rat(1))],
        ),
        (
            "n14",
            "n45",
            "x56",
            vec![("n15", "x56", rat(-1)), ("n14", "n46", rat(1))],
        ),
    ];
    for (a, b, x, expect) in d3_cases {
        let col = triple_pos(a, b, x);
        let mut want = vec![Rational::zero(); b2.len()];
        for (p, q, v) in expect {
            want[pair_pos(p, q)] = v;
        }
        for (row, expected) in want.iter().enumerate() {
            c.check_eq(
                d3.get(row, col).clone(),
                expected.clone(),
                &format!("d3({a}^{b}^{x}) row {row}"),
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_06_blow_up_suite() {
    let start = Instant::now();
    let mut c = Criterion::new(6, "blow-up contract on every corpus algebra");
    for alg in corpus::all_fixtures() {
        let res = blow_up(&alg);
        let h2 = h2_degree_zero(&alg);
        c.check_eq(
            res.kernel_dim,
            h2.dim_h2_0,
            &format!("{}: kernel dim vs dim H2_0", alg.name),
        );
        c.check(
            res.blown_up.validate().is_empty(),
            format!("{}: blow-up fails validation", alg.name),
        );
        let verification = verify_blow_up(&alg, &res);
        c.check(
            verification.all_ok(),
            format!("{}: {:?}", alg.name, verification.failures),
        );
        if alg.is_1_tame().holds() {
            c.check(
                res.blown_up.is_1_tame().holds(),
                format!("{}: blow-up lost 1-tameness", alg.name),
            );
        }
        if is_relatively_perfect_degree_zero(&alg) {
            let second = blow_up(&res.blown_up);
            c.check_eq(
                second.kernel_dim,
                0,
                &format!("{}: second blow-up kernel", alg.name),
            );
        }
    }
    let elapsed = start.elapsed();
    c.check(
        elapsed.as_secs_f64() < 10.0,
        format!("runtime {elapsed:?} exceeded 10 s"),
    );
    c.finish();
}

#[test]
fn criterion_07_complex_suite() {
    let mut c = Criterion::new(
        7,
        "d2.d3 = 0 and d3.d4 = 0 at every occupied degree of every fixture",
    );
    for alg in corpus::all_fixtures() {
        let ws = alg.weight_support();
        let mut degrees = std::collections::BTreeSet::new();
        for a in &ws {
            for b in &ws {
                let ab = a.add(b);
                degrees.insert(ab.clone());
                for d in &ws {
                    let abd = ab.add(d);
                    degrees.insert(abd.clone());
                    for e in &ws {
                        degrees.insert(abd.add(e));
                    }
                }
            }
        }
        for degree in degrees {
            let b4 = wedge_basis(&alg, 4, &degree, false);
            let b3 = wedge_basis(&alg, 3, &degree, false);
            if b3.is_empty() && b4.is_empty() {
                continue;
            }
            let d2 = boundary_matrix(&alg, 2, &degree);
            let d3 = boundary_matrix(&alg, 3, &degree);
            c.check(
                d2.mul(&d3).is_zero(),
                format!("{}: d2.d3 != 0 at degree {degree}", alg.name),
            );
            if !b4.is_empty() {
                let d4 = boundary_matrix(&alg, 4, &degree);
                c.check(
                    d3.mul(&d4).is_zero(),
                    format!("{}: d3.d4 != 0 at degree {degree}", alg.name),
                );
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_08_tame_homology_theorems() {
    let mut c = Criterion::new(
        8,
        "doubly 1-tame fixtures: tame homology and tame Killing agree with the full modules",
    );
    let mut seen = 0;
    for alg in corpus::all_fixtures() {
        if !alg.is_doubly_1_tame().holds() {
            continue;
        }
        seen += 1;
        let h2 = h2_degree_zero(&alg);
        c.check_eq(
            h2.dim_h2_tame_0,
            h2.dim_h2_0,
            &format!("{}: tame vs full H2_0", alg.name),
        );
        let kill = killing_degree_zero(&alg);
        c.check_eq(
            kill.dim_kill_tame_0,
            kill.dim_kill_0,
            &format!("{}: tame vs full Kill_0", alg.name),
        );
    }
    c.check(
        seen >= 4,
        format!("only {seen} doubly 1-tame fixtures found"),
    );
    c.finish();
}

#[test]
fn criterion_09_stokes_suite() {
    let start = Instant::now();
    let mut c = Criterion::new(
        9,
        "loop integrals match their closed form; path calculus identities; triangle bound domination",
    );

    // real variant, l1 = l2 = 2: value 2^{n+1}
    let real = SolModel::real(rat(2), rat(2)).unwrap();
    for k in 1..=4 {
        for n in 1..=12 {
            let r = gamma_integral_check(&real, k, n, IntegrandVariant::Real).unwrap();
            c.check(r.equal, format!("real k={k} n={n}: norm mismatch"));
            c.check_eq(
                r.computed_norm.clone(),
                rational_power(&rat(2), n as i64 + 1),
                &format!("real k={k} n={n} value"),
            );
        }
    }
    // p-adic variant, l1 = 1/3 over Q_3, l2 = 1/5 over Q_5
    let padic = SolModel::new(
        NormModel::PAdic(3),
        NormModel::PAdic(5),
        ratio(1, 3),
        ratio(1, 5),
    )
    .unwrap();
    for k in 1..=4 {
        for n in 1..=12 {
            let r = gamma_integral_check(&padic, k, n, IntegrandVariant::Ultrametric).unwrap();
            c.check(r.equal, format!("padic k={k} n={n}: norm mismatch"));
            c.check_eq(
                r.computed_norm.clone(),
                rational_power(&rat(3), n as i64),
                &format!("padic k={k} n={n} value"),
            );
        }
    }

    // six path-calculus identities on 200 randomized relations
    let (alpha, beta) = standard_integrands(&real, IntegrandVariant::Real).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let base = SolElement::identity();
    let mut checked = 0;
    for _ in 0..200 {
        let r = random_relation(&mut rng);
        let rp = random_relation(&mut rng);
        let path_r = ClosedPath::from_word(&real, &r, &base).unwrap();
        let path_rp = ClosedPath::from_word(&real, &rp, &base).unwrap();
        let i_r = stokes_integral(&path_r, beta.as_ref(), alpha.as_ref());
        let i_rp = stokes_integral(&path_rp, beta.as_ref(), alpha.as_ref());

        // antisymmetry
        let swapped = stokes_integral(&path_r, alpha.as_ref(), beta.as_ref());
        c.check(i_r.add(&swapped).is_zero(), "antisymmetry failed");

        // concatenation / product of relations
        let mut prod = r.clone();
        prod.extend(rp.iter().copied());
        let i_prod = stokes_integral(
            &ClosedPath::from_word(&real, &prod, &base).unwrap(),
            beta.as_ref(),
            alpha.as_ref(),
        );
        c.check(i_prod == i_r.add(&i_rp), "product of relations failed");

        // filiform vanishing
        let mut fil = r.clone();
        fil.extend(dehn::stokes::invert_word(&r));
        let i_fil = stokes_integral(
            &ClosedPath::from_word(&real, &fil, &base).unwrap(),
            beta.as_ref(),
            alpha.as_ref(),
        );
        c.check(i_fil.is_zero(), "filiform vanishing failed");

        // length-2 vanishing
        let short = [Gen::T(1), Gen::T(-1)];
        let i_short = stokes_integral(
            &ClosedPath::from_word(&real, &short, &base).unwrap(),
            beta.as_ref(),
            alpha.as_ref(),
        );
        c.check(i_short.is_zero(), "length-2 vanishing failed");

        // conjugation invariance
        let conj: Vec<Gen> = (0..rng.gen_range(0..4))
            .map(|_| random_gen(&mut rng))
            .collect();
        let mut conjugated = conj.clone();
        conjugated.extend(r.iter().copied());
        conjugated.extend(dehn::stokes::invert_word(&conj));
        let g = conj.iter().fold(SolElement::identity(), |acc, gg| {
            real.mul(&acc, &gg.element())
        });
        let i_conj = stokes_integral(
            &ClosedPath::from_word(&real, &conjugated, &base).unwrap(),
            beta.as_ref(),
            alpha.as_ref(),
        );
        let i_translated =
            stokes_integral(&path_r.translate(&real, &g), beta.as_ref(), alpha.as_ref());
        c.check(i_conj == i_translated, "conjugation invariance failed");

        // combinatorial Stokes formula
        let mut total: Vec<Gen> = Vec::new();
        let mut expected = dehn::stokes::KValue::Scalar(Rational::zero());
        for _ in 0..3 {
            let conj: Vec<Gen> = (0..rng.gen_range(0..3))
                .map(|_| random_gen(&mut rng))
                .collect();
            let ri = random_relation(&mut rng);
            total.extend(conj.iter().copied());
            total.extend(ri.iter().copied());
            total.extend(dehn::stokes::invert_word(&conj));
            let gi = conj.iter().fold(SolElement::identity(), |acc, gg| {
                real.mul(&acc, &gg.element())
            });
            let p = ClosedPath::from_word(&real, &ri, &base)
                .unwrap()
                .translate(&real, &gi);
            expected = expected.add(&stokes_integral(&p, beta.as_ref(), alpha.as_ref()));
        }
        let i_total = stokes_integral(
            &ClosedPath::from_word(&real, &total, &base).unwrap(),
            beta.as_ref(),
            alpha.as_ref(),
        );
        c.check(i_total == expected, "combinatorial Stokes formula failed");
        checked += 1;
    }
    c.check_eq(checked, 200, "randomized word count");

    // triangle bound dominates exhaustively enumerated radius-3 triangles
    let c3 = triangle_bound(&real, 3);
    let pts = ball(&real, 3);
    let mut bases = vec![SolElement::identity()];
    for _ in 0..2 {
        let w: Vec<Gen> = (0..6).map(|_| random_gen(&mut rng)).collect();
        bases.push(w.iter().fold(SolElement::identity(), |acc, g| {
            real.mul(&acc, &g.element())
        }));
    }
    for g0 in &bases {
        for h in &pts {
            for hp in &pts {
                let t = ClosedPath::triangle(&real, g0, h, hp);
                let v = stokes_integral(&t, beta.as_ref(), alpha.as_ref());
                if v.norm(&real) > c3 {
                    c.check(false, "triangle integral exceeded the bound");
                }
            }
        }
    }

    let elapsed = start.elapsed();
    c.check(
        elapsed.as_secs_f64() < 30.0,
        format!("runtime {elapsed:?} exceeded 30 s"),
    );
    c.finish();
}

fn random_gen(rng: &mut ChaCha8Rng) -> Gen {
    match rng.gen_range(0..6) {
        0 => Gen::X(1),
        1 => Gen::X(-1),
        2 => Gen::Y(1),
        3 => Gen::Y(-1),
        4 => Gen::T(1),
        _ => Gen::T(-1),
    }
}

/// Random relation: a product of conjugated commutators of words landing
/// in the abelian translation subgroup.
fn random_relation(rng: &mut ChaCha8Rng) -> Vec<Gen> {
    let translation_word = |rng: &mut ChaCha8Rng| {
        let mut w = Vec::new();
        for _ in 0..rng.gen_range(1..3) {
            let a = rng.gen_range(-2..3i32);
            let mut s = if rng.gen_bool(0.5) {
                Gen::X(1)
            } else {
                Gen::Y(1)
            };
            if rng.gen_bool(0.5) {
                s = s.inverse();
            }
            for _ in 0..a.abs() {
                w.push(Gen::T(a.signum() as i8));
            }
            w.push(s);
            for _ in 0..a.abs() {
                w.push(Gen::T(-a.signum() as i8));
            }
        }
        w
    };
    let mut word = Vec::new();
    for _ in 0..rng.gen_range(1..3) {
        let conj: Vec<Gen> = (0..rng.gen_range(0..3)).map(|_| random_gen(rng)).collect();
        let a = translation_word(rng);
        let b = translation_word(rng);
        word.extend(conj.iter().copied());
        word.extend(a.iter().copied());
        word.extend(b.iter().copied());
        word.extend(dehn::stokes::invert_word(&a));
        word.extend(dehn::stokes::invert_word(&b));
        word.extend(dehn::stokes::invert_word(&conj));
    }
    word
}

#[test]
fn criterion_10_bch_suite() {
    let mut c = Criterion::new(
        10,
        "group law: associativity, matrix-oracle agreement, iterated commutator identity",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let random_vector = |alg: &GradedLieAlgebra, rng: &mut ChaCha8Rng| -> Vec<Rational> {
        (0..alg.dim())
            .map(|_| ratio(rng.gen_range(-3..4), rng.gen_range(1..4)))
            .collect()
    };
    for alg in corpus::all_fixtures() {
        let Some(s) = alg.descending_central_series().nilpotency_length else {
            continue;
        };
        let s = s.max(1);
        for _ in 0..100 {
            let x = random_vector(&alg, &mut rng);
            let y = random_vector(&alg, &mut rng);
            let z = random_vector(&alg, &mut rng);
            let xy = bch_product_to_degree(&alg, &x, &y, s);
            let yz = bch_product_to_degree(&alg, &y, &z, s);
            let left = bch_product_to_degree(&alg, &xy, &z, s);
            let right = bch_product_to_degree(&alg, &x, &yz, s);
            if left != right {
                c.check(false, format!("{}: associativity failed", alg.name));
                break;
            }
            // inverses compose to the identity
            let e = bch_product_to_degree(&alg, &x, &bch_inverse(&x), s);
            if e.iter().any(|v| !v.is_zero()) {
                c.check(false, format!("{}: inverse failed", alg.name));
                break;
            }
        }
        // iterated commutator identity on randomized s-tuples
        for _ in 0..10 {
            let tuple: Vec<Vec<Rational>> = (0..s).map(|_| random_vector(&alg, &mut rng)).collect();
            match verify_multicom(&alg, &tuple) {
                Ok(true) => {}
                other => {
                    c.check(false, format!("{}: multicom {:?}", alg.name, other));
                    break;
                }
            }
        }
    }
    // matrix-oracle agreement on the realized fixtures
    for (alg, rho) in corpus::matrix_realizations() {
        let s = alg
            .descending_central_series()
            .nilpotency_length
            .expect("realized fixtures are nilpotent");
        for _ in 0..25 {
            let x = random_vector(&alg, &mut rng);
            let y = random_vector(&alg, &mut rng);
            let z = bch_product_to_degree(&alg, &x, &y, s.max(1));
            if rho(&z) != unipotent_matrix_oracle(&rho(&x), &rho(&y)) {
                c.check(false, format!("{}: oracle disagreement", alg.name));
                break;
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_11_hc1_suite() {
    let mut c = Criterion::new(
        11,
        "cyclic pairing: unit value on t ^ t^-1, vanishing on cyclic triples",
    );
    let t = LaurentPoly::monomial(1, rat(1));
    let tinv = LaurentPoly::monomial(-1, rat(1));
    c.check_eq(hc1_pairing(&t, &tinv), rat(1), "F(t, t^-1)");
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let random_poly = |rng: &mut ChaCha8Rng| {
        let mut p = LaurentPoly::new();
        for _ in 0..rng.gen_range(1..5) {
            p.add_term(
                rng.gen_range(-4..5),
                ratio(rng.gen_range(-4..5), rng.gen_range(1..4)),
            );
        }
        p
    };
    for i in 0..100 {
        let u = random_poly(&mut rng);
        let v = random_poly(&mut rng);
        let w = random_poly(&mut rng);
        let total =
            hc1_pairing(&u.mul(&v), &w) + hc1_pairing(&v.mul(&w), &u) + hc1_pairing(&w.mul(&u), &v);
        c.check(total.is_zero(), format!("cyclic triple {i} did not vanish"));
    }
    c.finish();
}

#[test]
fn criterion_12_classifier_invariance() {
    let mut c = Criterion::new(
        12,
        "verdicts stable under graded basis change and positive weight scaling, 50 trials per fixture",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for alg in corpus::all_fixtures() {
        let base = classify(&alg).unwrap().verdict;
        for trial in 0..50 {
            let changed = random_graded_change(&alg, &mut rng);
            let got = classify(&changed).unwrap().verdict;
            if got != base {
                c.check(
                    false,
                    format!(
                        "{} trial {trial}: basis change flipped {base:?} -> {got:?}",
                        alg.name
                    ),
                );
                break;
            }
            let scale = ratio(rng.gen_range(1..6), rng.gen_range(1..6));
            let got = classify(&alg.scale_weights(&scale)).unwrap().verdict;
            if got != base {
                c.check(
                    false,
                    format!(
                        "{} trial {trial}: scaling flipped {base:?} -> {got:?}",
                        alg.name
                    ),
                );
                break;
            }
        }
    }
    c.finish();
}

/// Random invertible basis change preserving each weight-and-field block.
fn random_graded_change(alg: &GradedLieAlgebra, rng: &mut ChaCha8Rng) -> GradedLieAlgebra {
    let n = alg.dim();
    loop {
        let mut p = dehn::linalg::RationalMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                if alg.basis[i].weight == alg.basis[j].weight
                    && alg.basis[i].field == alg.basis[j].field
                {
                    let v = if i == j {
                        rat(rng.gen_range(1..4))
                    } else {
                        rat(rng.gen_range(-2..3))
                    };
                    p.set(i, j, v);
                }
            }
        }
        if p.rank() == n {
            if let Some(changed) = alg.apply_graded_basis_change(&p) {
                return changed;
            }
        }
    }
}
