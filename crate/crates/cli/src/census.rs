//! Runs every cross-check over a directory of ring files.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Value};

use ezd_core::classify::{
    ci_quotient_check, classify, quadratic_ci_check, staircase_degree_counts, top_sequence_check,
};
use ezd_core::ezd::{
    analyze_sequence, annihilator_principal_check, length_sum_check, max_strong_length, search,
    strong_length_bound, strong_test_tor, twin_swap_closure, Checks, Pool, SearchMode,
};
use ezd_core::koszul::{koszul_criterion_check, MAX_KOSZUL_LEN};
use ezd_core::{ArtinianRing, MonomialOrder, RingElement};

use crate::report::{els, hit_json, length_sum_json, quadratic_ci_json};
use crate::ringfile::LoadedRing;
use crate::CliError;

pub struct CensusResult {
    pub report: Value,
    pub consistent: bool,
}

/// Named pass/fail flags for one ring; absent checks did not apply.
#[derive(Default)]
struct Flags(BTreeMap<&'static str, bool>);

impl Flags {
    fn and(&mut self, name: &'static str, ok: bool) {
        let e = self.0.entry(name).or_insert(true);
        *e &= ok;
    }

    fn failures(&self) -> Vec<&'static str> {
        self.0.iter().filter(|(_, &ok)| !ok).map(|(k, _)| *k).collect()
    }
}

fn tuple_checks(ring: &ArtinianRing, xs: &[RingElement], flags: &mut Flags) -> ezd_core::Result<()> {
    let rep = analyze_sequence(ring, xs, Checks::all())?;
    let strong = rep.strong.as_ref().is_some_and(|s| s.verdict);
    if let Some(s) = &rep.strong {
        flags.and("lift_matches_exhaustive", s.agree != Some(false));
    }
    flags.and("tor_matches_strong", strong_test_tor(ring, xs)?.verdict == strong);
    let permutable = rep.permutable.as_ref().is_some_and(|p| p.verdict);
    flags.and("strong_permutable_minimal", (!strong || permutable) && (!permutable || rep.minimal));
    if rep.is_sequence {
        flags.and("annihilator_principal", annihilator_principal_check(ring, xs).holds());
    }
    if !xs.is_empty() && xs.len() <= MAX_KOSZUL_LEN {
        flags.and("koszul_matches_sequence", koszul_criterion_check(ring, xs)?.agree);
    }
    Ok(())
}

fn census_ring(lr: &LoadedRing) -> ezd_core::Result<(Value, Flags)> {
    let ring = &lr.ring;
    let c = classify(ring);
    let mut flags = Flags::default();
    if c.graded {
        flags.and("hilbert_matches_staircase", staircase_degree_counts(ring) == c.hilbert_function);
    }
    if lr.file.ring.inverse_system.is_some() {
        flags.and("inverse_system_gorenstein", c.gorenstein);
    }
    let n = ring.nvars();
    let vars: Vec<RingElement> = (0..n).map(|i| ring.var(i)).collect();
    let mut tuples: Vec<Vec<RingElement>> = Vec::new();
    let k = n.min(3);
    if k > 0 {
        tuples.push(vars[..k].to_vec());
        let rev: Vec<RingElement> = vars[..k].iter().rev().cloned().collect();
        tuples.push(rev);
    }
    let finite = ring.field().elements().is_some();
    let mut out = json!({});
    if finite {
        let (len, witness) = max_strong_length(ring, &Pool::LinearForms)?;
        let bound = strong_length_bound(ring, len);
        flags.and("strong_length_bound", bound.ok);
        let mut w = json!({
            "max_strong_length": len,
            "bound": bound.bound,
            "tight": bound.tight,
            "witness": witness.as_ref().map_or(Value::Null, |h| hit_json(ring, h)),
        });
        if let Some(h) = &witness {
            let d = length_sum_check(ring, &h.xs, &h.twins)?;
            flags.and("length_sum", d.equal);
            let closure = twin_swap_closure(ring, &h.xs, &h.twins)?;
            flags.and("twin_swap_strong", closure.iter().all(|r| r.strong.as_ref().is_some_and(|s| s.verdict)));
            w["length_sum"] = length_sum_json(&d);
            tuples.push(h.xs.clone());
        }
        out["strong"] = w;
        for h in search(ring, SearchMode::Sequences, 2, &Pool::LinearForms, Some(4))? {
            tuples.push(h.xs);
        }
        if c.graded {
            let q = quadratic_ci_check(ring)?;
            flags.and("quadratic_ci", q.equivalence_holds != Some(false) && q.implication_holds != Some(false));
            if let Some(h) = &q.witness {
                flags.and("top_sequence", top_sequence_check(ring, &h.xs).holds);
            }
            out["quadratic_ci"] = quadratic_ci_json(ring, &q);
        }
    }
    if c.graded && c.embedded_minimally && (1..=4).contains(&n) {
        let q = ci_quotient_check(ring, &vars)?;
        flags.and("ci_quotients", q.consistent);
    }
    for t in &tuples {
        tuple_checks(ring, t, &mut flags)?;
    }
    out["tuples_tested"] = json!(tuples.len());
    out["tuples"] = Value::Array(tuples.iter().map(|t| els(ring, t)).collect());
    out["classify"] = json!({
        "length": c.length,
        "hilbert_function": c.hilbert_function,
        "socle_dim": c.socle_dim,
        "gorenstein": c.gorenstein,
        "ci": c.ci(),
        "koszul_ci": c.koszul_ci(),
    });
    out["checks"] = json!(flags.0);
    Ok((out, flags))
}

/// Every `*.ring` file in `dir`, in filename order; a file that fails to load or compute is
/// reported and the rest still run.
pub fn run_census(dir: &Path, order: Option<MonomialOrder>) -> Result<CensusResult, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::Input(format!("cannot read {}: {e}", dir.display())))?;
    let mut files: Vec<_> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "ring"))
        .collect();
    files.sort();
    let mut rings = Vec::new();
    let (mut errors, mut failures, mut tuples) = (0usize, 0usize, 0u64);
    for path in &files {
        let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let result = LoadedRing::load(path, order).and_then(|lr| census_ring(&lr).map_err(CliError::from));
        match result {
            Ok((mut v, flags)) => {
                tuples += v["tuples_tested"].as_u64().unwrap_or(0);
                let failed = flags.failures();
                if !failed.is_empty() {
                    failures += 1;
                }
                v["file"] = json!(name);
                v["consistent"] = json!(failed.is_empty());
                v["failed_checks"] = json!(failed);
                rings.push(v);
            }
            Err(e) => {
                errors += 1;
                rings.push(json!({"file": name, "error": e.to_string()}));
            }
        }
    }
    Ok(CensusResult {
        consistent: failures == 0,
        report: json!({
            "summary": {
                "rings": files.len(),
                "errors": errors,
                "inconsistent": failures,
                "tuples_tested": tuples,
            },
            "rings": rings,
        }),
    })
}
