//! The nine acceptance criteria, each reported on one line.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::SeedableRng;

use supersphere::berezin::{base_chern_number, chern_number, quad_oracle_default, wallis_integrate};
use supersphere::golden;
use supersphere::sample::{trig_poly, Bounds, Sampler};
use supersphere::{
    BlockShape, Coeff, Element, Parity, RewriteSystem, Sign, SuperMatrix, Supersphere,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ss() -> &'static Supersphere {
    Supersphere::shared()
}

fn zero_mod(m: &SuperMatrix<Element>) -> bool {
    m.entries().all(|x| ss().reduce(x).is_zero())
}

fn sign_of(p: Parity, q: Parity) -> Coeff {
    if p == Parity::Odd && q == Parity::Odd {
        Coeff::int(-1)
    } else {
        Coeff::one()
    }
}

fn chern_numbers() -> Outcome {
    let start = Instant::now();
    let mut got = Vec::new();
    let mut bad = Vec::new();
    for n in 1..=6 {
        for sign in Sign::BOTH {
            let c = chern_number(sign, n).map_err(|e| format!("{sign} n = {n}: {e}"))?;
            got.push(c);
            if c != sign.charge(n) {
                bad.push(format!("{sign} n = {n}: expected {}, got {c}", sign.charge(n)));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 60.0 {
        bad.push(format!("runtime {secs:.1} s"));
    }
    if bad.is_empty() {
        Ok(format!("charges {got:?} in {secs:.2} s"))
    } else {
        Err(bad.join("; "))
    }
}

fn golden_projector() -> Outcome {
    let mut bad = Vec::new();
    for sign in Sign::BOTH {
        let m = golden::projector_mismatches(ss(), sign).map_err(|e| e.to_string())?;
        if !m.is_empty() {
            bad.push(format!("{sign}: entries {:?}", m.iter().map(|(i, j, _)| (i, j)).collect::<Vec<_>>()));
        }
    }
    let st = ss().projector_for(Sign::Minus, 1).and_then(|p| p.supertranspose()).map_err(|e| e.to_string())?;
    let p1 = golden::projector(ss(), Sign::Plus)
        .map_err(|e| e.to_string())?
        .map(|x| ss().coordinates_to_group(x));
    if !zero_mod(&st.sub(&p1).map_err(|e| e.to_string())?) {
        bad.push("st(p₋₁) differs from the golden p₁".into());
    }
    if bad.is_empty() {
        Ok("p₋₁ and p₁ match entry by entry".into())
    } else {
        Err(bad.join("; "))
    }
}

fn projector_identities() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=4 {
        for sign in Sign::BOTH {
            let p = ss().projector_for(sign, n).map_err(|e| e.to_string())?;
            let checks = [
                ("p² = p", zero_mod(&p.matmul(&p).and_then(|q| q.sub(&p)).map_err(|e| e.to_string())?)),
                ("p† = p", zero_mod(&p.dagger().and_then(|q| q.sub(&p)).map_err(|e| e.to_string())?)),
                ("Str p = 1", ss().equal_mod(&p.supertrace().map_err(|e| e.to_string())?, &ss().one())),
            ];
            for (name, ok) in checks {
                if !ok {
                    bad.push(format!("{name} fails for {sign} n = {n}"));
                }
            }
        }
        let pm = ss().projector_for(Sign::Minus, n).map_err(|e| e.to_string())?;
        let pp = ss().projector_for(Sign::Plus, n).map_err(|e| e.to_string())?;
        if !zero_mod(&pm.supertranspose().and_then(|q| q.sub(&pp)).map_err(|e| e.to_string())?) {
            bad.push(format!("st(p₋ₙ) ≠ p₊ₙ for n = {n}"));
        }
    }
    if bad.is_empty() {
        Ok("n = 1..4, both signs".into())
    } else {
        Err(bad.join("; "))
    }
}

fn connection_forms() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=4 {
        let am = ss().connection_form(&ss().psi(Sign::Minus, n).map_err(|e| e.to_string())?);
        let ap = ss().connection_form(&ss().psi(Sign::Plus, n).map_err(|e| e.to_string())?);
        if !ss().congruent(&am, &ss().connection_closed_form(Sign::Minus, n)) {
            bad.push(format!("A₋ₙ differs from the closed form at n = {n}"));
        }
        if !ss().congruent(&ap, &-am) {
            bad.push(format!("A₊ₙ ≠ −A₋ₙ at n = {n}"));
        }
    }
    if bad.is_empty() {
        Ok("n = 1..4".into())
    } else {
        Err(bad.join("; "))
    }
}

fn chern_form_chain() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=3 {
        let c = ss().chern_chain(Sign::Minus, n).map_err(|e| e.to_string())?;
        if !ss().congruent(&c.supertrace, &c.bracket) {
            let flipped = ss().congruent(&c.supertrace, &-c.bracket.clone());
            bad.push(format!(
                "n = {n}: Str(p(dp)²) ≠ ⟨dψ|dψ⟩{}",
                if flipped { " (they differ by an overall sign)" } else { "" }
            ));
        }
        if !ss().congruent(&c.bracket, &c.closed) {
            bad.push(format!("n = {n}: ⟨dψ|dψ⟩ ≠ closed form"));
        }
        if !ss().congruent(&c.closed, &c.closed_alt) {
            bad.push(format!("n = {n}: the two closed forms differ"));
        }
        let plus = ss().chern_form(Sign::Plus, n).map_err(|e| e.to_string())?;
        if !ss().congruent(&plus, &-c.supertrace.clone()) {
            bad.push(format!("n = {n}: C₁(p₊ₙ) ≠ −C₁(p₋ₙ)"));
        }
    }
    if bad.is_empty() {
        Ok("n = 1..3".into())
    } else {
        Err(bad.join("; "))
    }
}

fn group_identities() -> Outcome {
    let s = ss().group_element();
    let id = SuperMatrix::identity(ss().table(), s.rows());
    let mut bad = Vec::new();
    let ssd = s.matmul(&s.dagger().map_err(|e| e.to_string())?).and_then(|m| m.sub(&id));
    if !zero_mod(&ssd.map_err(|e| e.to_string())?) {
        bad.push("s s† ≠ 1".to_string());
    }
    let sdet = s.sdet(ss().group_rules()).map_err(|e| e.to_string())?;
    if !ss().equal_mod(&sdet, &ss().one()) {
        bad.push(format!("Sdet s = {sdet}"));
    }
    if ss().sphere_relation() != ss().one() {
        bad.push("Σx² + 2ξ₋ξ₊ ≠ 1".into());
    }
    let ids = ss().inversion_identities();
    for c in ids.iter().filter(|c| !c.holds()) {
        bad.push(format!("{} fails: {}", c.name, c.residual));
    }
    if bad.is_empty() {
        Ok(format!("unitarity, Sdet, sphere relation and {} inversion identities", ids.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn equivariance() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=3 {
        for sign in Sign::BOTH {
            let r = ss().check_equivariance(sign, n).map_err(|e| e.to_string())?;
            if !r.holds() {
                bad.push(format!("{sign} n = {n}: {r:?}"));
            }
        }
    }
    if bad.is_empty() {
        Ok("n = 1..3, both signs".into())
    } else {
        Err(bad.join("; "))
    }
}

fn property_suites() -> Outcome {
    let t = ss().table();
    let names = ["a", "a♦", "b", "b♦", "η", "η♦"];
    let s = Sampler::new(t, &names);
    let small = Sampler::new(t, &["a", "b", "η", "η♦"]).with_bounds(Bounds {
        max_terms: 2,
        max_exp: 1,
        max_coeff: 3,
    });
    let mut rng = StdRng::seed_from_u64(2024);
    let mut bad = Vec::new();

    for k in 0..100 {
        let p = if k % 2 == 0 { Parity::Even } else { Parity::Odd };
        let x = s.element(&mut rng, Some(p));
        let y = s.element(&mut rng, Some(Parity::Odd));
        if &x * &y != (&y * &x).scale_coeff(&sign_of(p, Parity::Odd)) {
            bad.push(format!("graded commutativity, sample {k}"));
        }
        let inv = if p == Parity::Odd { -x.clone() } else { x.clone() };
        if x.diamond().diamond() != inv || (&x * &y).diamond() != &x.diamond() * &y.diamond() {
            bad.push(format!("involution law, sample {k}"));
        }
    }

    let empty = RewriteSystem::new(t);
    let shape = BlockShape::even_first(2, 1);
    for k in 0..50 {
        let (p, q) = ([Parity::Even, Parity::Odd][k % 2], [Parity::Even, Parity::Odd][(k / 2) % 2]);
        let x = small.supermatrix(&mut rng, shape, shape, p);
        let y = small.supermatrix(&mut rng, shape, shape, q);
        let st = |m: &SuperMatrix<Element>| m.supertranspose().unwrap();
        let lhs = st(&x.matmul(&y).unwrap());
        let rhs = st(&y).matmul(&st(&x)).unwrap().scale(&sign_of(p, q));
        if lhs != rhs {
            bad.push(format!("(XY)^st law, sample {k}"));
        }
        if st(&x).supertrace().unwrap() != x.supertrace().unwrap()
            || x.supertrace_of_product(&y).unwrap()
                != y.supertrace_of_product(&x).unwrap().scale_coeff(&sign_of(p, q))
        {
            bad.push(format!("Str law, sample {k}"));
        }
        let u = small.invertible_even(&mut rng, shape);
        let v = small.invertible_even(&mut rng, shape);
        let sd = |m: &SuperMatrix<Element>| m.sdet(&empty).unwrap();
        if sd(&u.matmul(&v).unwrap()) != &sd(&u) * &sd(&v) || sd(&st(&u)) != sd(&u) {
            bad.push(format!("Sdet law, sample {k}"));
        }
    }

    for k in 0..100 {
        if !s.form(&mut rng, 2).d().d().is_zero() {
            bad.push(format!("d² = 0, sample {k}"));
        }
    }

    for k in 0..100 {
        let f = trig_poly(&mut rng, 6, 5);
        let err = (quad_oracle_default(&f) - wallis_integrate(&f).to_c64()).norm();
        if err >= 1e-9 {
            bad.push(format!("wallis vs quadrature, sample {k}: {err:e}"));
        }
    }

    if bad.is_empty() {
        Ok("100 elements, 50 supermatrix pairs, 100 forms, 100 trig polynomials".into())
    } else {
        Err(format!("{} failures: {}", bad.len(), bad.join("; ")))
    }
}

fn oracle_agreement() -> Outcome {
    let mut pairs = Vec::new();
    let mut bad = Vec::new();
    for n in 1..=2 {
        for sign in Sign::BOTH {
            let base = base_chern_number(ss(), sign, n).map_err(|e| e.to_string())?;
            let group = chern_number(sign, n).map_err(|e| e.to_string())?;
            pairs.push((base, group));
            if base != group {
                bad.push(format!("{sign} n = {n}: base {base}, group {group}"));
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("(base, group) = {pairs:?}"))
    } else {
        Err(bad.join("; "))
    }
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("chern numbers", chern_numbers),
        ("golden projector", golden_projector),
        ("projector identities", projector_identities),
        ("connection form", connection_forms),
        ("chern form chain", chern_form_chain),
        ("group identities", group_identities),
        ("equivariance", equivariance),
        ("property suites", property_suites),
        ("oracle agreement", oracle_agreement),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", k + 1),
            Err(detail) => {
                println!("FAIL {} {name}: {detail}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
