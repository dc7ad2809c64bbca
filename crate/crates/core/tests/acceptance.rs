//! Acceptance suite: every criterion below is exact (zero tolerance) and
//! prints one pass/fail line. Run with `cargo test --test acceptance --
//! --nocapture` to see the lines and timings.

use std::time::{Duration, Instant};

use oddsing_core::algebra::{gl_cached, SuperAlgebra};
use oddsing_core::coeff::{CartanPoly, Rat};
use oddsing_core::glmn::{
    self, atypicality_relation, c_values_generic, chain_formula, delta_symbol, eps_symbol,
    odd_root,
};
use oddsing_core::kac::{
    self, in_i_lambda, kac_context, kac_reduction_scalar, reduction_scalar_product,
    singular_in_kac,
};
use oddsing_core::osp::{osp62_example_vector, osp_cached, OspFamily};
use oddsing_core::pbw::{straighten, straighten_scheduled, weight_monomials, Element};
use oddsing_core::sampling;
use oddsing_core::solver::find_singular;
use oddsing_core::verma::{act_gen, VermaVector};
use oddsing_core::weight::Weight;

fn pass(criterion: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("[PASS] {criterion} ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "{criterion} exceeded its runtime budget: {elapsed:.2?} > {budget:.2?}"
    );
}

fn r(n: i64) -> Rat {
    Rat::int(n)
}


/// Symbolic coordinates: a_i and b_j as Cartan polynomials in the algebra's
/// own symbol order.
fn symbolic_coords(alg: &SuperAlgebra) -> (Vec<CartanPoly>, Vec<CartanPoly>) {
    let a = (1..=alg.delta_rank)
        .map(|i| CartanPoly::var(delta_symbol(alg, i)))
        .collect();
    let b = (1..=alg.eps_rank)
        .map(|j| CartanPoly::var(eps_symbol(alg, j)))
        .collect();
    (a, b)
}

#[test]
fn criterion_1_golden_examples_symbolic() {
    let started = Instant::now();

    // Example (1): gl(2|1), beta = d2 - e1:
    //   S = E(1,1bar)E(1bar,2bar) + (a2 - a1) E(1,2bar).
    {
        let alg = gl_cached(2, 1);
        let (a, b) = symbolic_coords(&alg);
        let datum = c_values_generic(2, 1, &a, &b);
        let terms = chain_formula(&alg, &datum);
        let labels = |word: &[usize]| -> Vec<String> {
            word.iter().map(|&g| alg.gen(g).label.clone()).collect()
        };
        assert_eq!(terms.len(), 2);
        assert_eq!(labels(&terms[0].2), ["E(1,1bar)", "E(1bar,2bar)"]);
        assert_eq!(terms[0].1, CartanPoly::one());
        assert_eq!(labels(&terms[1].2), ["E(1,2bar)"]);
        assert_eq!(terms[1].1, a[1].sub(&a[0]));
    }

    // Example (2): gl(3|1), beta = d3 - e1: four terms with coefficients
    //   1, (a3 - a2), (a3 - a1 + 1), (a3 - a1 + 1)(a3 - a2).
    {
        let alg = gl_cached(3, 1);
        let (a, b) = symbolic_coords(&alg);
        let datum = c_values_generic(3, 1, &a, &b);
        let terms = chain_formula(&alg, &datum);
        let labels = |word: &[usize]| -> Vec<String> {
            word.iter().map(|&g| alg.gen(g).label.clone()).collect()
        };
        let c32 = a[2].sub(&a[1]);
        let c31 = a[2].sub(&a[0]).add(&CartanPoly::one());
        assert_eq!(terms.len(), 4);
        assert_eq!(
            labels(&terms[0].2),
            ["E(1,1bar)", "E(1bar,2bar)", "E(2bar,3bar)"]
        );
        assert_eq!(terms[0].1, CartanPoly::one());
        assert_eq!(labels(&terms[1].2), ["E(1,1bar)", "E(1bar,3bar)"]);
        assert_eq!(terms[1].1, c32);
        assert_eq!(labels(&terms[2].2), ["E(1,2bar)", "E(2bar,3bar)"]);
        assert_eq!(terms[2].1, c31);
        assert_eq!(labels(&terms[3].2), ["E(1,3bar)"]);
        assert_eq!(terms[3].1, c31.mul(&c32));
    }

    // Example (3): gl(2|2), beta = d2 - e2: four terms with coefficients
    //   1, (a2 - a1), (b2 - b1 - 1), (a2 - a1)(b2 - b1 - 1).
    {
        let alg = gl_cached(2, 2);
        let (a, b) = symbolic_coords(&alg);
        let datum = c_values_generic(2, 2, &a, &b);
        let terms = chain_formula(&alg, &datum);
        let labels = |word: &[usize]| -> Vec<String> {
            word.iter().map(|&g| alg.gen(g).label.clone()).collect()
        };
        let ca = a[1].sub(&a[0]);
        let cb = b[1].sub(&b[0]).sub(&CartanPoly::one());
        assert_eq!(terms.len(), 4);
        assert_eq!(labels(&terms[0].2), ["E(2,1)", "E(1,1bar)", "E(1bar,2bar)"]);
        assert_eq!(terms[0].1, CartanPoly::one());
        assert_eq!(labels(&terms[1].2), ["E(2,1)", "E(1,2bar)"]);
        assert_eq!(terms[1].1, ca);
        assert_eq!(labels(&terms[2].2), ["E(2,1bar)", "E(1bar,2bar)"]);
        assert_eq!(terms[2].1, cb);
        assert_eq!(labels(&terms[3].2), ["E(2,2bar)"]);
        assert_eq!(terms[3].1, ca.mul(&cb));
    }

    pass("criterion 1: golden worked examples, symbolic", started, Duration::from_secs(1));
}

fn gl_sweep_instances() -> Vec<(usize, usize, usize, usize, Weight)> {
    // Every gl(m|n) with m,n in {1,2,3}, every beta = d_s - e_t, 5 seeded
    // integral atypical weights each.
    let mut out = Vec::new();
    for m in 1..=3 {
        for n in 1..=3 {
            let alg = gl_cached(m, n);
            for s in 1..=m {
                for t in 1..=n {
                    let beta = odd_root(&alg, s, t).unwrap();
                    let mut rng = sampling::rng(0xA11A + (m * 64 + n * 16 + s * 4 + t) as u64);
                    for _ in 0..5 {
                        let lam = sampling::atypical_weight(&alg, &beta, &mut rng);
                        out.push((m, n, s, t, lam));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn criterion_2_annihilation_sweep() {
    let started = Instant::now();
    let mut count = 0usize;
    for (m, n, s, t, lam) in gl_sweep_instances() {
        let alg = gl_cached(m, n);
        let beta = odd_root(&alg, s, t).unwrap();
        let v = glmn::singular_vector_formula(&alg, &lam, &beta).unwrap();
        for &g in &alg.simple_positive_gens {
            assert!(
                act_gen(&alg, g, &v).is_zero(),
                "gl({m}|{n}) beta=d{s}-e{t} lambda={lam}: {} does not annihilate",
                alg.gen(g).label
            );
        }
        count += 1;
    }
    assert_eq!(count, 180);
    pass("criterion 2: annihilation sweep (exact)", started, Duration::from_secs(60));
}

#[test]
fn criterion_3_uniqueness_oracle() {
    let started = Instant::now();
    for (m, n, s, t, lam) in gl_sweep_instances() {
        let alg = gl_cached(m, n);
        let beta = odd_root(&alg, s, t).unwrap();
        let mu = lam.sub(&beta.weight);
        let report = find_singular(&alg, &lam, &mu, None).unwrap();
        assert_eq!(
            report.nullspace_dim(),
            1,
            "gl({m}|{n}) beta=d{s}-e{t} lambda={lam}"
        );
        assert!(report.unique);
        assert_eq!(report.formula_match, Some(Rat::one()));
    }
    // Dimension 0 on seeded non-atypical weights, 5 per rank and root.
    for m in 1..=3 {
        for n in 1..=3 {
            let alg = gl_cached(m, n);
            for s in 1..=m {
                for t in 1..=n {
                    let beta = odd_root(&alg, s, t).unwrap();
                    let mut rng = sampling::rng(0xB0B0 + (m * 64 + n * 16 + s * 4 + t) as u64);
                    for _ in 0..5 {
                        let lam = sampling::non_atypical_weight(&alg, &beta, &mut rng);
                        let mu = lam.sub(&beta.weight);
                        let report = find_singular(&alg, &lam, &mu, None).unwrap();
                        assert_eq!(report.nullspace_dim(), 0);
                    }
                }
            }
        }
    }
    pass("criterion 3: uniqueness oracle (dim 1 / dim 0)", started, Duration::from_secs(120));
}

#[test]
fn criterion_4_shapovalov_specialization() {
    let started = Instant::now();
    for (m, n, s, t, lam) in gl_sweep_instances() {
        let alg = gl_cached(m, n);
        let beta = odd_root(&alg, s, t).unwrap();
        let theta = glmn::shapovalov_element(&alg, &beta).unwrap();
        let spec = glmn::specialize(&alg, &theta, &lam).unwrap();
        let v = glmn::singular_vector_formula(&alg, &lam, &beta).unwrap();
        assert_eq!(spec, v.expansion, "gl({m}|{n}) beta=d{s}-e{t} lambda={lam}");
    }
    pass("criterion 4: Shapovalov specialization", started, Duration::from_secs(60));
}

#[test]
fn criterion_5_kac_descent() {
    let started = Instant::now();
    let mut rng = sampling::rng(0x5EED);
    let mut done = 0usize;
    while done < 10 {
        let m = 1 + (done % 3);
        let n = 1 + (done * 7 % 3);
        let alg = gl_cached(m, n);
        let s = 1 + (done % m);
        let t = 1 + (done % n);
        let beta = odd_root(&alg, s, t).unwrap();
        let lam = sampling::dominant_atypical_pair(&alg, &beta, &mut rng);
        let ctx = kac_context(&alg, &lam).unwrap();

        let scalar = kac_reduction_scalar(&alg, &ctx, &beta).unwrap();
        let datum = glmn::c_values(&alg, &lam, &beta).unwrap();
        assert_eq!(scalar, reduction_scalar_product(&datum));
        assert!(!scalar.is_zero());
        // Sign pattern: the barred factors are positive, the (1 + c_j) are
        // negative, so the sign is (-1)^(t-1).
        assert_eq!(scalar.is_positive(), (t - 1) % 2 == 0, "t={t}");

        let verdict = singular_in_kac(&alg, &ctx, &beta).unwrap();
        assert!(verdict.descends);
        assert_eq!(verdict.report.nullspace_dim(), 1);
        assert!(verdict.report.unique);
        assert_eq!(verdict.odd_root_multiplicity, 1);

        // I_lambda is contained in J_lambda at the weights involved.
        let mu = lam.sub(&beta.weight);
        for v in kac::i_lambda_weight_span(&alg, &ctx, &mu).unwrap() {
            assert!(kac::reduce_mod_j(&alg, &v).is_zero());
        }
        done += 1;
    }
    pass("criterion 5: Kac descent, 10 dominant pairs", started, Duration::from_secs(120));
}

#[test]
fn criterion_6_remark_regression() {
    let started = Instant::now();
    let alg = gl_cached(2, 1);
    let beta = odd_root(&alg, 2, 1).unwrap();
    for a in [0i64, 1, 2] {
        let lam = Weight::from_display(&[r(a), r(a)], &[r(-a - 1)]);
        assert!(lam.is_dominant_integral());
        assert!(alg.is_atypical(&lam, &beta).unwrap());
        let datum = glmn::c_values(&alg, &lam, &beta).unwrap();
        assert!(datum.c[0].is_zero(), "c_1bar must vanish at a={a}");
        let ctx = kac_context(&alg, &lam).unwrap();
        assert!(kac_reduction_scalar(&alg, &ctx, &beta).unwrap().is_zero());
        let s = glmn::singular_vector_formula(&alg, &lam, &beta).unwrap();
        assert!(
            in_i_lambda(&alg, &ctx, &s).unwrap(),
            "S must lie in I_lambda (maps to zero in the Kac module) at a={a}"
        );
        // Descent must fail: lambda - beta is not dominant.
        assert!(!lam.sub(&beta.weight).is_dominant());
        assert!(singular_in_kac(&alg, &ctx, &beta).is_err());
    }
    pass("criterion 6: Remark regression (descent fails)", started, Duration::from_secs(10));
}

#[test]
fn criterion_7_osp_minus_case() {
    let started = Instant::now();
    let algebras = [
        osp_cached(OspFamily::Even, 2, 1), // osp(4|2)
        osp_cached(OspFamily::Even, 2, 2), // osp(4|4)
        osp_cached(OspFamily::Odd, 2, 1),  // osp(5|2)
    ];
    for real in &algebras {
        let alg = &real.algebra;
        for s in 1..=alg.delta_rank {
            for t in 1..=alg.eps_rank {
                let beta = odd_root(alg, s, t).unwrap();
                let mut rng =
                    sampling::rng(0x0502 + (alg.dim() * 16 + s * 4 + t) as u64);
                for _ in 0..3 {
                    let lam = sampling::atypical_weight(alg, &beta, &mut rng);
                    let v = glmn::singular_vector_formula(alg, &lam, &beta).unwrap();
                    assert!(!v.is_zero());
                    for &g in &alg.simple_positive_gens {
                        assert!(
                            act_gen(alg, g, &v).is_zero(),
                            "{} beta=d{s}-e{t} lambda={lam}: {} does not annihilate",
                            alg.name,
                            alg.gen(g).label
                        );
                    }
                    let mu = lam.sub(&beta.weight);
                    let report = find_singular(alg, &lam, &mu, None).unwrap();
                    assert_eq!(report.nullspace_dim(), 1, "{} lambda={lam}", alg.name);
                    assert_eq!(report.formula_match, Some(Rat::one()));
                }
            }
        }
    }
    pass("criterion 7: osp minus-case formulas", started, Duration::from_secs(300));
}

#[test]
fn criterion_8_osp62_plus_case_example() {
    let started = Instant::now();
    let real = osp_cached(OspFamily::Even, 3, 1);
    let alg = &real.algebra;
    let beta_w = Weight::delta_unit(1, 3, 1).add(&Weight::eps_unit(1, 3, 1));
    let mut rng = sampling::rng(0x0062);
    for _ in 0..5 {
        let b1 = sampling::rational(&mut rng);
        let b2 = sampling::rational(&mut rng);
        let b3 = sampling::rational(&mut rng);
        let lam = Weight {
            delta: vec![&b1 + &r(4)],
            eps: vec![b1, b2, b3],
        };
        let v = osp62_example_vector(&real, &lam).unwrap();
        assert!(!v.is_zero());
        let mu = lam.sub(&beta_w);
        let report = find_singular(alg, &lam, &mu, None).unwrap();
        assert_eq!(report.nullspace_dim(), 1, "lambda={lam}");
        let oracle = report.kernel_vector(0);
        let ratio = v.scalar_ratio(&oracle);
        assert!(
            matches!(&ratio, Some(r) if !r.is_zero()),
            "example vector must be exactly proportional to the oracle generator at lambda={lam}"
        );
    }
    pass("criterion 8: osp(6|2) worked plus-case instance", started, Duration::from_secs(120));
}

#[test]
fn criterion_9_kernel_property_suites() {
    let started = Instant::now();

    // Super-Jacobi, exhaustively, on every algebra instance in scope.
    for m in 1..=3 {
        for n in 1..=3 {
            gl_cached(m, n).verify_jacobi().unwrap();
        }
    }
    for (family, m, n) in [
        (OspFamily::Even, 2, 1),
        (OspFamily::Even, 2, 2),
        (OspFamily::Odd, 2, 1),
        (OspFamily::Even, 3, 1),
    ] {
        osp_cached(family, m, n).algebra.verify_jacobi().unwrap();
    }

    // Straightening schedule-independence on 200 random words of length <= 6
    // over the full gl(2|2) basis.
    {
        let alg = gl_cached(2, 2);
        let mut rng = sampling::rng(0x57A1);
        for case in 0..200u64 {
            let len = 1 + (case % 6) as usize;
            let word: Vec<usize> = (0..len)
                .map(|_| {
                    use rand::Rng;
                    rng.random_range(0..alg.dim())
                })
                .collect();
            let reference = straighten::<Rat>(&alg, &word);
            assert_eq!(
                straighten_scheduled::<Rat>(&alg, &word, 0x9000 + case),
                reference,
                "word {word:?}"
            );
        }
    }

    // Module-action identity on 200 random homogeneous pairs.
    {
        use rand::Rng;
        let alg = gl_cached(2, 2);
        let mut rng = sampling::rng(0xAC71);
        for _ in 0..200 {
            let lam = Weight {
                delta: vec![r(rng.random_range(-6..=6)), r(rng.random_range(-6..=6))],
                eps: vec![r(rng.random_range(-6..=6)), r(rng.random_range(-6..=6))],
            };
            let word: Vec<usize> = (0..rng.random_range(0..=2))
                .map(|_| alg.negative_gens[rng.random_range(0..alg.negative_gens.len())])
                .collect();
            let v = VermaVector::from_expansion(lam, straighten::<Rat>(&alg, &word));
            let x = rng.random_range(0..alg.dim());
            let y = rng.random_range(0..alg.dim());
            let sign = alg.gen(x).parity.swap_sign(alg.gen(y).parity);
            let lhs = act_gen(&alg, x, &act_gen(&alg, y, &v))
                .sub(&act_gen(&alg, y, &act_gen(&alg, x, &v)).scale(&r(sign)));
            let mut rhs = VermaVector::from_expansion(
                v.highest_weight.clone(),
                Element::zero(),
            );
            for (g, c) in alg.bracket(x, y) {
                rhs = rhs.add(&act_gen(&alg, g, &v).scale(&c));
            }
            assert_eq!(
                lhs,
                rhs,
                "action identity fails for x={} y={}",
                alg.gen(x).label,
                alg.gen(y).label
            );
        }
    }

    // Weight-space count 2^{s+t-2} at -beta for every gl rank in scope.
    for m in 1..=3usize {
        for n in 1..=3usize {
            let alg = gl_cached(m, n);
            for s in 1..=m {
                for t in 1..=n {
                    let beta = Weight::delta_unit(m, n, s).sub(&Weight::eps_unit(m, n, t));
                    assert_eq!(
                        weight_monomials(&alg, &beta.neg()).len(),
                        1usize << (s + t - 2)
                    );
                }
            }
        }
    }

    // The atypicality relation agrees with the invariant form pairing.
    for m in 1..=3usize {
        for n in 1..=3usize {
            let alg = gl_cached(m, n);
            let mut rng = sampling::rng(77);
            for s in 1..=m {
                for t in 1..=n {
                    let beta = odd_root(&alg, s, t).unwrap();
                    let lam = sampling::atypical_weight(&alg, &beta, &mut rng);
                    let lhs = atypicality_relation(s, t, &lam.delta, &lam.eps);
                    let rhs = alg
                        .bilinear_form(&lam.add(&alg.rho), &beta.weight)
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    pass("criterion 9: kernel property suites", started, Duration::from_secs(120));
}
