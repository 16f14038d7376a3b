//! The property and identity checks behind `verify`.

use std::num::NonZeroUsize;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde_json::{json, Value};

use supersphere::berezin::{
    base_chern_number, chern_computation, quad_oracle, wallis_integrate, Orientation,
};
use supersphere::golden;
use supersphere::json::{element_to_json, form_to_json};
use supersphere::sample::{Bounds, Sampler};
use supersphere::{
    BlockShape, Coeff, Element, Parity, RewriteSystem, Sign, SuperForm, SuperMatrix, Supersphere,
};

use crate::report::{Record, Status, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Algebra,
    Matrix,
    Forms,
    Monopole,
    Chern,
    All,
}

/// Settings shared by every check.
#[derive(Clone, Copy, Debug)]
pub struct Context {
    pub n_max: u32,
    pub quad_order: NonZeroUsize,
}

type Outcome = Result<(), Value>;

struct Check {
    name: &'static str,
    n: Option<u32>,
    sign: Option<Sign>,
    run: Box<dyn Fn(&Context) -> Outcome + Send + Sync>,
}

fn check(name: &'static str, run: impl Fn(&Context) -> Outcome + Send + Sync + 'static) -> Check {
    Check {
        name,
        n: None,
        sign: None,
        run: Box::new(run),
    }
}

fn per_n(
    name: &'static str,
    n: u32,
    sign: Option<Sign>,
    run: impl Fn(&Context) -> Outcome + Send + Sync + 'static,
) -> Check {
    Check {
        name,
        n: Some(n),
        sign,
        run: Box::new(run),
    }
}

fn ss() -> &'static Supersphere {
    Supersphere::shared()
}

fn err(e: supersphere::Error) -> Value {
    json!({ "error": e.to_string() })
}

const NAMES: [&str; 6] = ["a", "a♦", "b", "b♦", "η", "η♦"];
const SAMPLES: u64 = 100;

fn sampler() -> Sampler {
    Sampler::new(ss().table(), &NAMES)
}

fn small_sampler() -> Sampler {
    Sampler::new(ss().table(), &["a", "b", "η", "η♦"]).with_bounds(Bounds {
        max_terms: 2,
        max_exp: 1,
        max_coeff: 3,
    })
}

fn swap_sign(p: Parity, q: Parity) -> Coeff {
    if p == Parity::Odd && q == Parity::Odd {
        Coeff::int(-1)
    } else {
        Coeff::one()
    }
}

/// Runs `body` on seeds `0..count`; the first failing seed is the witness.
fn seeded(count: u64, body: impl Fn(&mut StdRng) -> Option<Value>) -> Outcome {
    for seed in 0..count {
        if let Some(w) = body(&mut StdRng::seed_from_u64(seed)) {
            return Err(json!({ "seed": seed, "detail": w }));
        }
    }
    Ok(())
}

/// First entry of `m` that does not reduce to zero.
fn nonzero_entry(m: &SuperMatrix<Element>) -> Option<Value> {
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let x = ss().reduce(m.get(i, j));
            if !x.is_zero() {
                return Some(json!({ "row": i, "col": j, "value": element_to_json(&x) }));
            }
        }
    }
    None
}

fn form_witness(what: &str, x: &SuperForm, y: &SuperForm) -> Outcome {
    if ss().congruent(x, y) {
        Ok(())
    } else {
        Err(json!({
            "check": what,
            "difference": form_to_json(&ss().local_normal_form(&(x - y))),
        }))
    }
}

fn algebra_checks() -> Vec<Check> {
    vec![
        check("algebra.graded_commutativity", |_| {
            seeded(SAMPLES, |rng| {
                let s = sampler();
                for p in [Parity::Even, Parity::Odd] {
                    for q in [Parity::Even, Parity::Odd] {
                        let x = s.element(rng, Some(p));
                        let y = s.element(rng, Some(q));
                        if &x * &y != (&y * &x).scale_coeff(&swap_sign(p, q)) {
                            return Some(json!({ "x": element_to_json(&x), "y": element_to_json(&y) }));
                        }
                    }
                }
                None
            })
        }),
        check("algebra.involution", |_| {
            seeded(SAMPLES, |rng| {
                let s = sampler();
                let x = s.element(rng, Some(Parity::Even));
                let y = s.element(rng, Some(Parity::Odd));
                let ok = x.diamond().diamond() == x
                    && y.diamond().diamond() == -y.clone()
                    && (&x * &y).diamond() == &x.diamond() * &y.diamond();
                (!ok).then(|| json!({ "x": element_to_json(&x), "y": element_to_json(&y) }))
            })
        }),
        check("algebra.rewrite_idempotence", |_| {
            seeded(SAMPLES, |rng| {
                let x = sampler().element(rng, None);
                let r = ss().group_rules();
                let once = r.reduce(&x);
                (r.reduce(&once) != once).then(|| element_to_json(&x))
            })
        }),
    ]
}

fn matrix_checks() -> Vec<Check> {
    let shape = BlockShape::odd_first(2, 1);
    vec![
        check("matrix.supertranspose_product", move |_| {
            seeded(50, |rng| {
                let s = small_sampler();
                for (p, q) in [(Parity::Even, Parity::Odd), (Parity::Odd, Parity::Odd)] {
                    let x = s.supermatrix(rng, shape, shape, p);
                    let y = s.supermatrix(rng, shape, shape, q);
                    let st = |m: &SuperMatrix<Element>| m.supertranspose().expect("declared parity");
                    let lhs = st(&x.matmul(&y).expect("square"));
                    let rhs = st(&y).matmul(&st(&x)).expect("square").scale(&swap_sign(p, q));
                    if lhs != rhs {
                        return Some(json!({ "parities": [format!("{p:?}"), format!("{q:?}")] }));
                    }
                }
                None
            })
        }),
        check("matrix.supertrace", move |_| {
            seeded(50, |rng| {
                let s = small_sampler();
                let (p, q) = (Parity::Odd, Parity::Odd);
                let x = s.supermatrix(rng, shape, shape, p);
                let y = s.supermatrix(rng, shape, shape, q);
                let cyclic = x.supertrace_of_product(&y).ok()
                    == y.supertrace_of_product(&x).ok().map(|v| v.scale_coeff(&swap_sign(p, q)));
                let transpose = x.supertranspose().and_then(|m| m.supertrace()).ok() == x.supertrace().ok();
                (!(cyclic && transpose)).then(|| json!({ "cyclic": cyclic, "transpose": transpose }))
            })
        }),
        check("matrix.superdeterminant", |_| {
            let empty = RewriteSystem::new(ss().table());
            let shape = BlockShape::even_first(2, 1);
            seeded(50, |rng| {
                let s = small_sampler();
                let x = s.invertible_even(rng, shape);
                let y = s.invertible_even(rng, shape);
                let sd = |m: &SuperMatrix<Element>| m.sdet(&empty).ok();
                let xy = x.matmul(&y).expect("square");
                let product = sd(&xy) == sd(&x).zip(sd(&y)).map(|(a, b)| &a * &b);
                let transpose = sd(&x.supertranspose().expect("even")) == sd(&x);
                (!(product && transpose)).then(|| json!({ "product": product, "transpose": transpose }))
            })
        }),
        check("matrix.osp12_closure", |_| {
            let o = ss().osp12();
            let basis: Vec<SuperMatrix<Element>> = o.all().into_iter().cloned().collect();
            for (i, x) in basis.iter().enumerate() {
                for (j, y) in basis.iter().enumerate() {
                    let br = x.graded_bracket(y).map_err(err)?;
                    let (_, residual) = SuperMatrix::decompose(&basis, &br).map_err(err)?;
                    if !residual.is_zero() {
                        return Err(json!({ "pair": [i, j] }));
                    }
                }
            }
            Ok(())
        }),
        check("matrix.group_element", |_| {
            let s = ss().group_element();
            let id = SuperMatrix::identity(ss().table(), s.rows());
            let unit = s.matmul(&s.dagger().map_err(err)?).and_then(|m| m.sub(&id)).map_err(err)?;
            if let Some(w) = nonzero_entry(&unit) {
                return Err(json!({ "s s† − 1": w }));
            }
            let sdet = s.sdet(ss().group_rules()).map_err(err)?;
            if !ss().equal_mod(&sdet, &ss().one()) {
                return Err(json!({ "sdet": element_to_json(&sdet) }));
            }
            Ok(())
        }),
    ]
}

fn forms_checks() -> Vec<Check> {
    vec![
        check("forms.d_squared", |_| {
            seeded(SAMPLES, |rng| {
                let w = sampler().form(rng, 2);
                let dd = w.d().d();
                (!dd.is_zero()).then(|| form_to_json(&w))
            })
        }),
        check("forms.leibniz", |_| {
            seeded(SAMPLES, |rng| {
                let s = sampler();
                let x = s.element(rng, None);
                let y = s.element(rng, None);
                let rhs = &(&x.d() * &SuperForm::from(&y)) + &SuperForm::from(&x).wedge(&y.d());
                ((&x * &y).d() != rhs).then(|| json!({ "x": element_to_json(&x), "y": element_to_json(&y) }))
            })
        }),
        check("forms.group_relation", |_| {
            let rel = &(&ss().gen("a") * &ss().gen("a♦")) + &(&ss().gen("b") * &ss().gen("b♦"));
            let r = ss().reduce_form(&rel.d());
            if r.is_zero() {
                Ok(())
            } else {
                Err(form_to_json(&r))
            }
        }),
    ]
}

fn monopole_checks(n_max: u32) -> Vec<Check> {
    let mut out = vec![
        check("monopole.coordinates", |_| {
            let rel = ss().sphere_relation();
            if rel != ss().one() {
                return Err(json!({ "sphere_relation": element_to_json(&rel) }));
            }
            for c in ss().inversion_identities() {
                if !c.holds() {
                    return Err(json!({ "identity": c.name, "residual": element_to_json(&c.residual) }));
                }
            }
            Ok(())
        }),
    ];
    for sign in Sign::BOTH {
        out.push(per_n("monopole.golden", 1, Some(sign), move |_| {
            let m = golden::projector_mismatches(ss(), sign).map_err(err)?;
            match m.first() {
                None => Ok(()),
                Some((i, j, x)) => Err(json!({ "row": i, "col": j, "difference": element_to_json(x) })),
            }
        }));
    }
    for n in 1..=n_max {
        for sign in Sign::BOTH {
            out.push(per_n("monopole.normalization", n, Some(sign), move |_| {
                let psi = ss().psi(sign, n).map_err(err)?;
                let norm = ss().normalization(&psi);
                if norm == ss().one() {
                    Ok(())
                } else {
                    Err(element_to_json(&norm))
                }
            }));
            out.push(per_n("monopole.projector", n, Some(sign), move |_| {
                let p = ss().projector_for(sign, n).map_err(err)?;
                if let Some(w) = nonzero_entry(&p.matmul(&p).and_then(|q| q.sub(&p)).map_err(err)?) {
                    return Err(json!({ "p² − p": w }));
                }
                if let Some(w) = nonzero_entry(&p.dagger().and_then(|q| q.sub(&p)).map_err(err)?) {
                    return Err(json!({ "p† − p": w }));
                }
                let str_ = p.supertrace().map_err(err)?;
                if !ss().equal_mod(&str_, &ss().one()) {
                    return Err(json!({ "Str p": element_to_json(&ss().reduce(&str_)) }));
                }
                Ok(())
            }));
            out.push(per_n("monopole.equivariance", n, Some(sign), move |_| {
                let r = ss().check_equivariance(sign, n).map_err(err)?;
                if r.holds() {
                    Ok(())
                } else {
                    Err(json!({ "psi": r.psi_failures, "projector": r.projector_failures }))
                }
            }));
            out.push(per_n("monopole.connection", n, Some(sign), move |_| {
                let a = ss().connection_form(&ss().psi(sign, n).map_err(err)?);
                form_witness("A = closed form", &a, &ss().connection_closed_form(sign, n))?;
                form_witness("A† = −A", &a.diamond(), &-a)
            }));
        }
        out.push(per_n("monopole.supertranspose", n, None, move |_| {
            let pm = ss().projector_for(Sign::Minus, n).map_err(err)?;
            let pp = ss().projector_for(Sign::Plus, n).map_err(err)?;
            match nonzero_entry(&pm.supertranspose().and_then(|m| m.sub(&pp)).map_err(err)?) {
                None => Ok(()),
                Some(w) => Err(w),
            }
        }));
    }
    out
}

fn chern_checks(n_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for sign in Sign::BOTH {
            out.push(per_n("chern.integer", n, Some(sign), move |_| {
                let c = chern_computation(ss(), sign, n, Orientation::ThetaPhi).map_err(err)?;
                if c.charge.unsigned_abs() == n as u64 {
                    Ok(())
                } else {
                    Err(json!({ "chern_number": c.charge }))
                }
            }));
            out.push(per_n("chern.charge", n, Some(sign), move |_| {
                let c = chern_computation(ss(), sign, n, Orientation::ThetaPhi).map_err(err)?;
                if c.charge == sign.charge(n) {
                    Ok(())
                } else {
                    Err(json!({ "expected": sign.charge(n), "chern_number": c.charge }))
                }
            }));
            out.push(per_n("chern.quadrature", n, Some(sign), move |ctx| {
                let c = chern_computation(ss(), sign, n, Orientation::ThetaPhi).map_err(err)?;
                let q = quad_oracle(&c.density, ctx.quad_order);
                let e = wallis_integrate(&c.density).to_c64();
                let gap = (q - e).norm();
                if gap < 1e-9 {
                    Ok(())
                } else {
                    Err(json!({ "quadrature": [q.re, q.im], "exact": [e.re, e.im], "gap": gap }))
                }
            }));
            if n <= 2 {
                out.push(per_n("chern.base_path", n, Some(sign), move |_| {
                    let base = base_chern_number(ss(), sign, n).map_err(err)?;
                    let group = chern_computation(ss(), sign, n, Orientation::ThetaPhi).map_err(err)?.charge;
                    if base == group {
                        Ok(())
                    } else {
                        Err(json!({ "base": base, "group": group }))
                    }
                }));
            }
        }
        out.push(per_n("chern.opposite_signs", n, None, move |_| {
            let m = ss().chern_form(Sign::Minus, n).map_err(err)?;
            let p = ss().chern_form(Sign::Plus, n).map_err(err)?;
            form_witness("C₁(p₊) = −C₁(p₋)", &p, &-m)
        }));
        out.push(per_n("chern.chain", n, Some(Sign::Minus), move |_| {
            let c = ss().chern_chain(Sign::Minus, n).map_err(err)?;
            form_witness("⟨dψ|dψ⟩ = closed form", &c.bracket, &c.closed)?;
            form_witness("closed forms agree", &c.closed, &c.closed_alt)?;
            form_witness("Str(p(dp)²) = ⟨dψ|dψ⟩", &c.supertrace, &c.bracket)
        }));
    }
    out
}

fn checks(suite: Suite, n_max: u32) -> Vec<Check> {
    match suite {
        Suite::Algebra => algebra_checks(),
        Suite::Matrix => matrix_checks(),
        Suite::Forms => forms_checks(),
        Suite::Monopole => monopole_checks(n_max),
        Suite::Chern => chern_checks(n_max),
        Suite::All => [Suite::Algebra, Suite::Matrix, Suite::Forms, Suite::Monopole, Suite::Chern]
            .into_iter()
            .flat_map(|s| checks(s, n_max))
            .collect(),
    }
}

/// Runs every check of `suite` in parallel.
pub fn run(suite: Suite, ctx: Context) -> VerificationReport {
    let records = checks(suite, ctx.n_max)
        .into_par_iter()
        .map(|c| {
            let start = Instant::now();
            let outcome = (c.run)(&ctx);
            Record {
                name: c.name.to_string(),
                n: c.n,
                sign: c.sign,
                status: if outcome.is_ok() { Status::Pass } else { Status::Fail },
                witness: outcome.err(),
                elapsed: start.elapsed(),
            }
        })
        .collect();
    VerificationReport::new(records)
}
