//! Brute-force checks of the trace and Clifford identities on explicit
//! 16×16 matrices, plus an exact fit of the true closed form.

mod fit;
mod sample;
mod tags;

pub use fit::{pairings, Fit};
pub use sample::{stream_of, Sampler, DEFAULT_SEED};
pub use tags::{registry, Ctx, IdentityTag, Inst, Side};

use crate::boundary_residue::{BoundaryResidue, NORMAL};
use crate::error::{EngineError, Result};
use crate::fiber_algebra::{Covector, Params};
use crate::interior_residue::{InteriorResidue, SphereValue};
use crate::report::{OracleCase, OracleSummary, Verdict};
use crate::scalar_ring::{GaussRat, ParamScalar};

pub const DEFAULT_TRIALS: usize = 100;

pub const FUNCTIONALS: [&str; 4] = ["torsion", "one-form", "boundary", "sanity"];

pub fn tag_names() -> Vec<&'static str> {
    registry().iter().map(|t| t.name).collect()
}

/// Tags whose name starts with `prefix`; an empty prefix selects all.
pub fn select(prefix: &str) -> Result<Vec<IdentityTag>> {
    let tags: Vec<_> = registry().into_iter().filter(|t| t.name.starts_with(prefix)).collect();
    if tags.is_empty() {
        return Err(EngineError::UnknownTag(prefix.to_string()));
    }
    Ok(tags)
}

pub fn sample_inst(s: &mut Sampler, boundary: bool) -> Inst {
    let (u, v, w, x) = (s.covector(4), s.covector(4), s.covector(4), s.covector(4));
    let xi = if boundary { s.sphere2_point() } else { s.covector(4) };
    Inst {
        u,
        v,
        w,
        x,
        xi,
        n: Covector::basis(4, NORMAL),
    }
}

fn instantiation(t: &Inst, boundary: bool) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = [("u", &t.u), ("v", &t.v), ("w", &t.w), ("X", &t.x)]
        .iter()
        .map(|(k, c)| (k.to_string(), c.to_string()))
        .collect();
    if boundary {
        out.push(("xi'".into(), t.xi.to_string()));
        out.push(("dxn".into(), t.n.to_string()));
    } else {
        out.push(("xi".into(), t.xi.to_string()));
    }
    out
}

/// Compares the two sides. Matrices report their traces when they agree and
/// the first differing entry otherwise.
fn compare(brute: Side, closed: Side) -> (ParamScalar, ParamScalar, Verdict) {
    match (brute, closed) {
        (Side::Scalar(b), Side::Scalar(c)) => {
            let v = Verdict::of_scalars(&b, &c);
            (c, b, v)
        }
        (Side::Matrix(b), Side::Matrix(c)) => match b.first_difference(&c) {
            None => (c.trace(), b.trace(), Verdict::Match),
            Some((r, col)) => {
                let (x, y) = (b.get(r, col).clone(), c.get(r, col).clone());
                let delta = format!("entry ({r}, {col}): {}", (&x - &y).to_text());
                (y, x, Verdict::Mismatch { delta })
            }
        },
        (b, c) => (
            side_value(&c),
            side_value(&b),
            Verdict::Mismatch {
                delta: "a matrix was compared with a scalar".into(),
            },
        ),
    }
}

fn side_value(s: &Side) -> ParamScalar {
    match s {
        Side::Scalar(x) => x.clone(),
        Side::Matrix(m) => m.trace(),
    }
}

/// Trials of one tag together with the instantiations and brute-force
/// values, which the fit reuses.
fn run_trials(tag: &IdentityTag, trials: usize, seed: u64) -> (Vec<OracleCase>, Vec<Inst>, Vec<ParamScalar>) {
    let ctx = Ctx::new(Params::symbolic());
    let mut s = Sampler::new(seed, stream_of(tag.name));
    let mut cases = Vec::with_capacity(trials);
    let mut insts = Vec::with_capacity(trials);
    let mut values = Vec::with_capacity(trials);
    for trial in 0..trials {
        let t = sample_inst(&mut s, tag.boundary);
        let (closed_form, brute_force, verdict) = compare((tag.brute)(&ctx, &t), (tag.closed)(&ctx, &t));
        cases.push(OracleCase {
            tag: tag.name.to_string(),
            trial,
            instantiation: instantiation(&t, tag.boundary),
            closed_form,
            brute_force: brute_force.clone(),
            verdict,
        });
        values.push(brute_force);
        insts.push(t);
    }
    (cases, insts, values)
}

/// Runs `trials` seeded instantiations of the tag named exactly `tag`.
pub fn check_identity(tag: &str, trials: usize, seed: u64) -> Result<Vec<OracleCase>> {
    let t = registry()
        .into_iter()
        .find(|t| t.name == tag)
        .ok_or_else(|| EngineError::UnknownTag(tag.to_string()))?;
    Ok(run_trials(&t, trials, seed).0)
}

pub fn summarize(tag: &IdentityTag, trials: usize, seed: u64) -> OracleSummary {
    let (cases, insts, values) = run_trials(tag, trials, seed);
    let fitted = (!tag.vars.is_empty()).then(|| fit::fit(tag.vars, &insts, &values));
    let matches = cases.iter().filter(|c| c.verdict.is_match()).count();
    OracleSummary {
        tag: tag.name.to_string(),
        statement: tag.statement.to_string(),
        trials,
        matches,
        oracle_form: fitted.as_ref().map(Fit::to_text),
        reconstruction_ok: fitted.as_ref().map(|f| f.consistent),
        first_mismatch: cases.into_iter().find(|c| !c.verdict.is_match()),
    }
}

/// Every tag under `prefix`, in registry order. Tags run on separate
/// threads; each has its own random stream, so the result does not depend
/// on scheduling.
pub fn verify(prefix: &str, trials: usize, seed: u64) -> Result<Vec<OracleSummary>> {
    let tags = select(prefix)?;
    Ok(std::thread::scope(|scope| {
        let handles: Vec<_> = tags
            .iter()
            .map(|t| scope.spawn(move || summarize(t, trials, seed)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("oracle thread")).collect()
    }))
}

/// Runs the whole numeric pipeline at fixed parameters and returns the
/// bracket coefficient of the functional.
pub fn full_pipeline_numeric(a: &GaussRat, b: &GaussRat, functional: &str) -> Result<SphereValue> {
    let p = Params::numeric(a.clone(), b.clone())?;
    match functional {
        "torsion" => InteriorResidue::new(p).torsion_coefficients().bracket_coefficient(),
        "one-form" => Ok(InteriorResidue::new(p).one_form_coefficient()),
        "boundary" => BoundaryResidue::new(p).boundary_torsion()?.bracket_coefficient(),
        "sanity" => Ok(InteriorResidue::new(p).wres_laplacian_sanity()),
        other => Err(EngineError::UnknownFunctional(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_tag_is_rejected() {
        assert!(matches!(check_identity("nope", 1, 0), Err(EngineError::UnknownTag(_))));
        assert!(matches!(select("zzz"), Err(EngineError::UnknownTag(_))));
    }

    #[test]
    fn tag_names_are_unique() {
        let names = tag_names();
        let set: std::collections::BTreeSet<_> = names.iter().collect();
        assert_eq!(set.len(), names.len());
    }
}
