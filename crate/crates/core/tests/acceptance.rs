//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use outerharm::classify::{class_pairs, norm2_check, LatticeElement, SymmetricSpaceId};
use outerharm::exactnum::{GaussianRational, Poly, RationalFunction as Rf};
use outerharm::liealg::{CartanVector, GroupSpec};
use outerharm::loopfact::{
    dress, evaluate, flag_loop, gamma_xi, loop_assemble, model_subspace_with, morphism_u, unitary_part,
    unitary_part_with, CMat, FactorOptions, LaurentLoop,
};
use outerharm::rootdata::{diagram_involution, pair, root_weight, simple_roots, zeta_duals, Involution};
use outerharm::verify::{check_constant_loop, run_suite, CheckKind, SuiteOptions};
use outerharm::weierstrass::{
    check_extended_solution, example, example_names, exp_c, sone_invariant_flag, ExtendedSolutionData, Residual,
};

type C = Complex<f64>;

fn c(re: f64, im: f64) -> C {
    Complex::new(re, im)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

// ---------- criterion 1: root data against closed formulas ----------

fn basis_vec(n: usize, i: usize) -> Vec<BigRational> {
    (0..n).map(|k| if k == i { BigRational::one() } else { BigRational::zero() }).collect()
}

fn add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(a: &[BigRational], s: &BigRational) -> Vec<BigRational> {
    a.iter().map(|x| x * s).collect()
}

fn partial_sum(n: usize, upto: usize) -> Vec<BigRational> {
    (0..n).map(|k| if k < upto { BigRational::one() } else { BigRational::zero() }).collect()
}

struct Oracle {
    alpha: Vec<Vec<BigRational>>,
    h: Vec<Vec<BigRational>>,
    beta: Vec<Vec<BigRational>>,
    zeta: Vec<Vec<BigRational>>,
    minus_e: Vec<bool>,
    positive: usize,
    perm: Vec<usize>,
}

fn so_oracle(n: usize) -> Oracle {
    let e = |i: usize| basis_vec(n, i);
    let mut alpha: Vec<_> = (0..n - 1).map(|i| add(&e(i), &scale(&e(i + 1), &q(-1, 1)))).collect();
    alpha.push(add(&e(n - 2), &e(n - 1)));
    let mut h: Vec<_> = (1..=n - 2).map(|i| partial_sum(n, i)).collect();
    let mut hn1 = scale(&partial_sum(n, n - 1), &q(1, 2));
    hn1[n - 1] = q(-1, 2);
    h.push(hn1);
    h.push(scale(&partial_sum(n, n), &q(1, 2)));
    let mut beta: Vec<_> = alpha[..n - 2].to_vec();
    beta.push(scale(&add(&alpha[n - 2], &alpha[n - 1]), &q(1, 2)));
    let zeta: Vec<_> = (1..n).map(|i| partial_sum(n, i)).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(n - 2, n - 1);
    Oracle { alpha, h, beta, minus_e: vec![false; n - 1], zeta, positive: n * (n - 1), perm }
}

fn su_oracle(m: usize) -> Oracle {
    let e = |i: usize| basis_vec(m, i);
    let alpha: Vec<_> = (0..m - 1).map(|i| add(&e(i), &scale(&e(i + 1), &q(-1, 1)))).collect();
    let h: Vec<Vec<BigRational>> = (1..m)
        .map(|i| (0..m).map(|k| if k < i { q((m - i) as i64, m as i64) } else { q(-(i as i64), m as i64) }).collect())
        .collect();
    let half = q(1, 2);
    let (mut beta, mut zeta, mut minus_e) = (Vec::new(), Vec::new(), Vec::new());
    if m % 2 == 1 {
        let n = (m - 1) / 2;
        for i in 1..=n {
            zeta.push(add(&h[i - 1], &h[m - i - 1]));
            beta.push(scale(&add(&alpha[i - 1], &alpha[m - i - 1]), &half));
            minus_e.push(false);
        }
    } else {
        let n = m / 2;
        zeta.push(h[n - 1].clone());
        beta.push(alpha[n - 1].clone());
        minus_e.push(true);
        for i in 2..=n {
            zeta.push(add(&h[i - 2], &h[2 * n - i]));
            beta.push(scale(&add(&alpha[i - 2], &alpha[2 * n - i]), &half));
            minus_e.push(false);
        }
    }
    Oracle { alpha, h, beta, zeta, minus_e, positive: m * (m - 1) / 2, perm: (0..m - 1).rev().collect() }
}

fn exp_two_pi_is_minus_e(z: &CartanVector) -> Result<bool, String> {
    let two = q(2, 1);
    let doubled: Vec<BigRational> = z.coords.iter().map(|x| x * &two).collect();
    ensure(doubled.iter().all(|x| x.is_integer()), "exp 2 pi zeta not central")?;
    let odd = doubled.iter().filter(|x| !(x.to_integer() % BigInt::from(2)).is_zero()).count();
    ensure(odd == 0 || odd == doubled.len(), "exp 2 pi zeta not central")?;
    Ok(odd > 0)
}

fn criterion_1() -> Result<String, String> {
    let cases: Vec<(GroupSpec, Oracle)> = vec![
        (GroupSpec::so(6), so_oracle(3)),
        (GroupSpec::so(8), so_oracle(4)),
        (GroupSpec::so(10), so_oracle(5)),
        (GroupSpec::su(3), su_oracle(3)),
        (GroupSpec::su(4), su_oracle(4)),
        (GroupSpec::su(5), su_oracle(5)),
        (GroupSpec::su(6), su_oracle(6)),
    ];
    for (g, o) in &cases {
        let (a, h) = simple_roots(g);
        let a: Vec<_> = a.iter().map(root_weight).collect();
        ensure(a == o.alpha, format!("{g}: simple roots"))?;
        ensure(h.iter().map(|x| x.coords.clone()).collect::<Vec<_>>() == o.h, format!("{g}: H_i"))?;
        ensure(g.positive_roots().len() == o.positive, format!("{g}: positive root count"))?;
        let sf = zeta_duals(g);
        ensure(sf.beta == o.beta, format!("{g}: beta"))?;
        ensure(sf.zeta.iter().map(|x| x.coords.clone()).collect::<Vec<_>>() == o.zeta, format!("{g}: zeta"))?;
        for (i, b) in sf.beta.iter().enumerate() {
            for (j, z) in sf.zeta.iter().enumerate() {
                let want = if i == j { BigRational::one() } else { BigRational::zero() };
                ensure(pair(b, z) == want, format!("{g}: beta{}(zeta{})", i + 1, j + 1))?;
            }
        }
        for (i, ai) in a.iter().enumerate() {
            for (j, hj) in h.iter().enumerate() {
                let want = if i == j { BigRational::one() } else { BigRational::zero() };
                ensure(pair(ai, hj) == want, format!("{g}: alpha{}(H{})", i + 1, j + 1))?;
            }
        }
        for (i, z) in sf.zeta.iter().enumerate() {
            ensure(exp_two_pi_is_minus_e(z)? == o.minus_e[i], format!("{g}: exp 2 pi zeta{}", i + 1))?;
        }
        ensure(diagram_involution(g).map_err(|e| e.to_string())?.perm == o.perm, format!("{g}: diagram involution"))?;
    }
    Ok(format!("{} groups match closed formulas", cases.len()))
}

// ---------- criterion 2: class lists ----------

type PairList = Vec<(Vec<i64>, Vec<i64>)>;

fn pairs_of(g: &GroupSpec, space: SymmetricSpaceId) -> Result<PairList, String> {
    let mut v: PairList = class_pairs(g, space)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|p| (p.zeta.zeta_coeffs, p.tau.shift_mod2()))
        .collect();
    v.sort();
    Ok(v)
}

fn sorted(mut v: PairList) -> PairList {
    v.sort();
    v
}

fn criterion_2() -> Result<String, String> {
    let mut count = 0;
    for n in 2..=6 {
        let g = GroupSpec::so(2 * n);
        let want: PairList = (0..n - 1)
            .map(|l| {
                let mut z = vec![0; n - 1];
                z[l] = 1;
                (z.clone(), z)
            })
            .collect();
        ensure(pairs_of(&g, SymmetricSpaceId::RealProjective { n })? == sorted(want), format!("RP{}", 2 * n - 1))?;
        count += 1;
    }
    let v = |a: [i64; 2], b: [i64; 2]| (a.to_vec(), b.to_vec());
    let g3 = vec![
        v([1, 0], [0, 0]),
        v([1, 1], [0, 0]),
        v([0, 1], [1, 0]),
        v([1, 0], [0, 1]),
        v([1, 1], [0, 1]),
        v([0, 1], [1, 1]),
    ];
    ensure(pairs_of(&GroupSpec::so(6), SymmetricSpaceId::Grassmannian { p: 3, n: 3 })? == sorted(g3), "G3R6")?;
    let q2 = vec![v([2, 0], [0, 0]), v([0, 1], [0, 1])];
    ensure(pairs_of(&GroupSpec::su(4), SymmetricSpaceId::Quaternionic { n: 2 })? == sorted(q2), "Q2s")?;
    let l4 = vec![v([2, 0], [1, 0]), v([0, 1], [1, 0]), v([2, 1], [1, 0]), v([0, 1], [1, 1]), v([2, 1], [1, 1])];
    ensure(pairs_of(&GroupSpec::su(4), SymmetricSpaceId::Lagrangian { m: 4 })? == sorted(l4), "L4s")?;
    let l3 = vec![(vec![1], vec![0]), (vec![1], vec![1])];
    ensure(pairs_of(&GroupSpec::su(3), SymmetricSpaceId::Lagrangian { m: 3 })? == sorted(l3), "L3s")?;
    count += 4;
    Ok(format!("{count} spaces match the reference class lists"))
}

// ---------- criterion 3: exact constraint equations ----------

fn poly(cs: &[i64]) -> Rf {
    Rf::from_poly(Poly::from_ints(cs))
}

fn d(f: &Rf) -> Rf {
    f.derivative()
}

fn k(n: i64) -> Rf {
    Rf::from_int(n)
}

fn samples() -> Vec<[Rf; 4]> {
    vec![
        [poly(&[1, 2, 0, 1]), poly(&[3, 0, 1]), poly(&[0, 1, 5]), poly(&[2, 7])],
        [poly(&[0, 1, 1]), poly(&[1, 0, 0, 2]), poly(&[3, 1]), poly(&[0, 0, 1])],
        [poly(&[2, 0, 1]), poly(&[1, 1]), poly(&[1, 0, 0, 1]), poly(&[5, 0, 1])],
        [Rf::z().inv().unwrap(), poly(&[1, 3]), poly(&[0, 2]), poly(&[1])],
    ]
}

fn proportional(f: &Rf, g: &Rf) -> bool {
    f.checked_div(g).is_ok_and(|r| r.as_constant().is_some())
}

fn residuals(name: &str, fs: &[Rf]) -> Result<Vec<Residual>, String> {
    let data = example(name).map_err(|e| e.to_string())?.with_functions(fs);
    Ok(check_extended_solution(&data).map_err(|e| e.to_string())?.residuals)
}

fn criterion_3() -> Result<String, String> {
    for [a, b, c, dd] in samples() {
        let r = residuals("rp5", &[a.clone(), b.clone(), c.clone()])?;
        let want = &d(&c) - &(&(&b * &d(&a)) - &(&a * &d(&b)));
        ensure(!r.is_empty() && r.iter().all(|x| proportional(&x.value, &want)), "rp5: c' = ba' - ab'")?;

        let fs = [a.clone(), b.clone(), c.clone(), dd.clone(), poly(&[1, 1]), poly(&[0, 0, 2])];
        let r = residuals("g3r6-worked", &fs)?;
        let e1 = &(&k(2) * &d(&c)) - &(&(&a * &d(&b)) - &(&b * &d(&a)));
        let e2 = &(&k(3) * &d(&dd)) - &(&(&k(3) * &(&c * &d(&b))) - &(&b * &d(&c)));
        let by = |l: &str| r.iter().find(|x| x.label == l).map(|x| x.value.clone()).unwrap_or_else(Rf::zero);
        ensure(proportional(&by("X13"), &e1), "g3r6: 2c' = ab' - ba'")?;
        let third = GaussianRational::from_frac(1, 3);
        let rest = &by("Y12") - &e2.scale(&third);
        ensure(rest == &b.scale(&third) * &e1, "g3r6: 3d' = 3cb' - bc' modulo the first")?;

        let r = residuals("l4s-free", &[a.clone(), b.clone(), c.clone()])?;
        let want = &(&a * &d(&b)) - &(&b * &d(&a));
        ensure(!r.is_empty() && r.iter().all(|x| proportional(&x.value, &want)), "SU4 family: ab' = ba'")?;

        ensure(residuals("rp3", std::slice::from_ref(&a))?.is_empty(), "rp3 constrained")?;
        ensure(residuals("wu1", &[a.clone(), b.clone()])?.is_empty(), "wu1 constrained")?;
        ensure(residuals("wu2", &[a.clone(), b.clone()])?.is_empty(), "wu2 constrained")?;
        ensure(residuals("q2s", &[k(2), k(-1), k(5), a.clone()])?.is_empty(), "q2s constrained")?;
    }
    Ok("RP5, G3R6 and SU4 constraints exact; RP3, L3s and Q2s free".into())
}

// ---------- criterion 4: closed forms of exp C and flags ----------

fn criterion_4() -> Result<String, String> {
    let err = |e: outerharm::Error| e.to_string();
    let e = exp_c(&example("rp3").map_err(err)?).map_err(err)?.lambda_coeff(0);
    let a = Rf::z();
    let a2 = &a * &a;
    let (o, zr) = (Rf::one(), Rf::zero());
    let want = vec![
        vec![o.clone(), a.clone(), -&a2, a.clone()],
        vec![zr.clone(), o.clone(), -&a, zr.clone()],
        vec![zr.clone(), zr.clone(), o.clone(), zr.clone()],
        vec![zr.clone(), zr, -&a, o],
    ];
    ensure(e.rows() == want, "rp3 exp C")?;

    let half = GaussianRational::from_frac(1, 2);
    for (name, sign) in [("wu1", -1), ("wu2", 1)] {
        let (fa, fb) = (poly(&[1, 2, 3]), poly(&[0, 5]));
        let data = example(name).map_err(err)?.with_functions(&[fa.clone(), fb.clone()]);
        let e13 = exp_c(&data).map_err(err)?.get(0, 2).clone();
        ensure(
            e13.coeff(0) == (&fa * &fa).scale(&GaussianRational::from_int(sign)).scale(&half),
            format!("{name} (1,3) at lambda^0"),
        )?;
        ensure(e13.coeff(1) == fb, format!("{name} (1,3) at lambda^1"))?;
    }

    let flag = sone_invariant_flag(&example("g3r6-worked").map_err(err)?).map_err(err)?;
    let big_v = vec![
        poly(&[12, 0, -12, 0, -1]),
        poly(&[0, 0, 0, -4]),
        poly(&[12, 0, -6]),
        poly(&[12]),
        poly(&[0, -12]),
        poly(&[-12, 0, 6]),
    ];
    let big_w = vec![poly(&[0, 6, 0, 1]), poly(&[0, 0, 3]), poly(&[0, 3]), poly(&[0]), poly(&[3]), poly(&[0, -3])];
    let times = |v: &[Rf], s: i64| -> Vec<Rf> { v.iter().map(|f| f.scale(&GaussianRational::from_int(s))).collect() };
    ensure(flag.len() >= 2 && flag[0].level == -2 && flag[1].level == -1, "g3r6 flag levels")?;
    ensure(flag[0].vectors.len() == 1 && times(&flag[0].vectors[0], 12) == big_v, "g3r6 V")?;
    ensure(flag[1].vectors.len() == 2 && times(&flag[1].vectors[1], 3) == big_w, "g3r6 W")?;
    ensure(flag[1].vectors[0] == flag[0].vectors[0], "g3r6 flag nesting")?;
    Ok("RP3, L3s and G3R6 closed forms reproduced exactly".into())
}

// ---------- criterion 5: dressing ----------

fn circle(rng: &mut ChaCha8Rng) -> C {
    let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    c(t.cos(), t.sin())
}

fn criterion_5() -> Result<String, String> {
    let err = |e: outerharm::Error| e.to_string();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let wide = FactorOptions { extra_window: 2, ..FactorOptions::default() };
    let (mut worst_unit, mut worst_win) = (0.0f64, 0.0f64);
    for (name, _) in example_names() {
        let data = example(name).map_err(err)?;
        let n = data.group.size;
        let zero = data.with_functions(&vec![Rf::zero(); data.coeffs.len()]);
        let gamma: LaurentLoop<f64> = gamma_xi(&zero.group, &zero.xi_cartan()).map_err(err)?;
        let phi0 = dress(&zero, c(0.4, -0.2)).map_err(err)?;
        ensure(phi0.max_coeff_diff(&gamma) <= 1e-12, format!("{name}: zero datum"))?;

        let z = c(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
        let phi = dress(&data, z).map_err(err)?;
        let id = CMat::<f64>::identity(n, n);
        ensure((evaluate(&phi, c(1.0, 0.0)) - &id).norm() <= 1e-12, format!("{name}: Phi(1)"))?;
        for _ in 0..20 {
            let m = evaluate(&phi, circle(&mut rng));
            worst_unit = worst_unit.max((m.adjoint() * &m - &id).norm());
        }
        let l = loop_assemble(&data, z).map_err(err)?;
        let a = unitary_part(&l).map_err(err)?;
        let b = unitary_part_with(&l, &wide).map_err(err)?;
        worst_win = worst_win.max(a.max_coeff_diff(&b));
    }
    ensure(worst_unit <= 1e-10, format!("unitarity {worst_unit:.1e}"))?;
    ensure(worst_win <= 1e-10, format!("window stability {worst_win:.1e}"))?;
    let data = example("rp3").map_err(err)?;
    let mut worst_flag = 0.0f64;
    for _ in 0..20 {
        let z = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let lam = circle(&mut rng);
        let phi = dress(&data, z).map_err(err)?;
        let proj = flag_loop(&data, z).map_err(err)?;
        worst_flag = worst_flag.max((evaluate(&phi, lam) - evaluate(&proj, lam)).norm());
    }
    ensure(worst_flag <= 1e-9, format!("rp3 flag loop {worst_flag:.1e}"))?;
    Ok(format!("unitarity {worst_unit:.1e}, window {worst_win:.1e}, rp3 flag {worst_flag:.1e}"))
}

// ---------- criterion 6: verification suite ----------

fn criterion_6() -> Result<String, String> {
    let opts = SuiteOptions { grid: (3, 3), ..SuiteOptions::default() };
    let mut runs = 0;
    for (name, _) in example_names() {
        let data = example(name).map_err(|e| e.to_string())?;
        let kinds: Vec<CheckKind> = CheckKind::ALL.iter().copied().filter(|k| k.applies_to(&data)).collect();
        for r in run_suite(&data, &kinds, &opts).map_err(|e| format!("{name}: {e}"))? {
            ensure(r.pass, format!("{name}: {} residual {:.1e}", r.check, r.max_residual))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} checks pass across {} examples", example_names().len()))
}

// ---------- criterion 7: normalization to constant morphisms ----------

fn norm2_datum() -> ExtendedSolutionData {
    let g = GroupSpec::su(4);
    ExtendedSolutionData::new(
        g,
        Some(Involution::sigma_rho_i(&g, 2).unwrap()),
        LatticeElement::new(vec![2, 1]),
        vec![
            (0, "X12+X34", poly(&[0, 1])),
            (0, "X13-X24", poly(&[1])),
            (0, "X14", poly(&[0, 1])),
            (1, "X13+X24", poly(&[1])),
            (2, "X13-X24", poly(&[1])),
            (2, "X14", poly(&[0, 1])),
        ],
    )
    .unwrap()
}

fn criterion_7() -> Result<String, String> {
    let err = |e: outerharm::Error| e.to_string();
    let data = norm2_datum();
    let g = data.group;
    ensure(check_extended_solution(&data).map_err(err)?.pass, "datum is not an extended solution")?;
    let sig = data.sigma.clone().unwrap();
    let xi = data.xi_cartan();
    let zs = [c(0.1, 0.2), c(-0.7, 0.4), c(1.3, -0.5), c(0.0, -1.0), c(2.0, 0.5)];
    let good = LatticeElement::new(vec![0, 1]).cartan(&g);
    ensure(norm2_check(&g, &sig, &xi, &good).map_err(err)?, "norm2 fails for zeta_2")?;
    let target = xi.sub(&good);
    let loops = zs.iter().map(|&z| morphism_u(&data, &target, z)).collect::<Result<Vec<_>, _>>().map_err(err)?;
    let constant = check_constant_loop(&loops, 1e-8);
    ensure(constant.pass, format!("morphism not constant: {:.1e}", constant.max_residual))?;
    let bad = LatticeElement::new(vec![2, 0]).cartan(&g);
    ensure(!norm2_check(&g, &sig, &xi, &bad).map_err(err)?, "norm2 holds for 2 zeta_1")?;
    let target = xi.sub(&bad);
    let loops = zs.iter().map(|&z| morphism_u(&data, &target, z)).collect::<Result<Vec<_>, _>>().map_err(err)?;
    let control = check_constant_loop(&loops, 1e-8);
    ensure(!control.pass, "control morphism is constant")?;
    Ok(format!("spread {:.1e} (control {:.1e})", constant.max_residual, control.max_residual))
}

// ---------- criterion 8: scale ----------

fn peak_rss_kib() -> Option<u64> {
    let s = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = s.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

fn large_case(data: &ExtendedSolutionData, target: usize) -> Result<String, String> {
    let err = |e: outerharm::Error| e.to_string();
    ensure(check_extended_solution(data).map_err(err)?.pass, format!("{}: datum check", data.group))?;
    let n = data.group.size;
    let z = c(0.3, -0.6);
    let l = loop_assemble(data, z).map_err(err)?;
    let base = model_subspace_with(&l, &FactorOptions::default()).map_err(err)?;
    let extra = (target / n).saturating_sub(base.len());
    let opts = FactorOptions { extra_window: extra, ..FactorOptions::default() };
    let t = Instant::now();
    let ws = model_subspace_with(&l, &opts).map_err(err)?;
    let phi = unitary_part_with(&l, &opts).map_err(err)?;
    let secs = t.elapsed().as_secs_f64();
    let id = CMat::<f64>::identity(n, n);
    let m = evaluate(&phi, c(0.6, 0.8));
    let unit = (m.adjoint() * &m - &id).norm();
    ensure(unit <= 1e-9, format!("{}: unitarity {unit:.1e}", data.group))?;
    let reference = unitary_part(&l).map_err(err)?;
    let diff = phi.max_coeff_diff(&reference);
    ensure(diff <= 1e-9, format!("{}: wide window differs by {diff:.1e}", data.group))?;
    Ok(format!("{} window {} in {secs:.2}s", data.group, ws.n * ws.len()))
}

fn criterion_8() -> Result<String, String> {
    let so8 = GroupSpec::so(8);
    let so8_data = ExtendedSolutionData::new(
        so8,
        None,
        LatticeElement::new(vec![1, 1, 1]),
        vec![
            (0, "X12", poly(&[0, 1])),
            (0, "X34", poly(&[0, 0, 1])),
            (0, "Y34", poly(&[1])),
            (1, "Y12", poly(&[1])),
            (2, "Y13", poly(&[1])),
        ],
    )
    .map_err(|e| e.to_string())?;
    let su5 = GroupSpec::su(5);
    let su5_data = ExtendedSolutionData::new(
        su5,
        Some(Involution::sigma_rho(&su5)),
        LatticeElement::new(vec![2, 2]),
        vec![
            (0, "X12-X45", poly(&[1])),
            (1, "X12+X45", poly(&[0, 1])),
            (2, "X13-X35", poly(&[1])),
            (3, "X15", poly(&[1])),
        ],
    )
    .map_err(|e| e.to_string())?;
    let a = large_case(&so8_data, 200)?;
    let b = large_case(&su5_data, 200)?;
    let rss = peak_rss_kib().ok_or("peak memory unavailable")?;
    ensure(rss < 1024 * 1024, format!("peak memory {} MiB", rss / 1024))?;
    Ok(format!("{a}; {b}; peak memory {} MiB", rss / 1024))
}

type Criterion = fn() -> Result<String, String>;

fn main() {
    let start = Instant::now();
    let criteria: [(&str, Criterion); 8] = [
        ("root data tables", criterion_1),
        ("class pairs", criterion_2),
        ("extended-solution constraints", criterion_3),
        ("closed forms and flags", criterion_4),
        ("dressing", criterion_5),
        ("verification suite", criterion_6),
        ("constant morphisms", criterion_7),
        ("scale and resources", criterion_8),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {title}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {title}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    let total = start.elapsed().as_secs_f64();
    println!("acceptance finished in {total:.1}s");
    if failed > 0 || total > 300.0 {
        std::process::exit(1);
    }
}
