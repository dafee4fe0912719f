//! JSON payloads for the core results, and the text rendering of a report.

use serde_json::{json, Map, Value};

use ezd_core::classify::{
    classify, ClassifyReport, CiQuotientCheck, QuadraticCiCheck, TopSequenceCheck,
};
use ezd_core::ezd::{
    AnnihilatorCheck, EzdReport, LengthSumCheck, SearchHit, SequenceReport, StrongResult, TorReport,
    TorStrongResult,
};
use ezd_core::koszul::KoszulCriterion;
use ezd_core::{ArtinianRing, RingElement};

pub const SCHEMA_VERSION: u32 = 1;

/// Normal form, scaled so the leading coefficient is 1.
pub fn el(ring: &ArtinianRing, a: &RingElement) -> Value {
    Value::String(ring.render_normalized(a))
}

pub fn els(ring: &ArtinianRing, v: &[RingElement]) -> Value {
    Value::Array(v.iter().map(|a| el(ring, a)).collect())
}

fn opt<T, F: FnOnce(&T) -> Value>(x: &Option<T>, f: F) -> Value {
    x.as_ref().map_or(Value::Null, f)
}

pub fn ring_summary(ring: &ArtinianRing) -> Value {
    let c = classify(ring);
    json!({
        "field": ring.field().to_string(),
        "vars": ring.var_names(),
        "order": ring.order().name(),
        "length": ring.length(),
        "hilbert_function": c.hilbert_function,
        "socle_degree": c.socle_degree,
        "socle_dim": c.socle_dim,
    })
}

pub fn classify_json(ring: &ArtinianRing, c: &ClassifyReport) -> Value {
    let not_computed = || Value::String("not computed".into());
    let g = c.generators.as_ref();
    json!({
        "length": c.length,
        "hilbert_function": c.hilbert_function,
        "hilbert_series": c.hilbert_series(),
        "socle_degree": c.socle_degree,
        "socle_dim": c.socle_dim,
        "gorenstein": c.gorenstein,
        "graded": c.graded,
        "embedded_minimally": c.embedded_minimally,
        "generator_degrees": g.map_or_else(not_computed, |g| json!(g.degrees)),
        "mu_ideal": g.map_or_else(not_computed, |g| json!(g.mu)),
        "ci": g.map_or_else(not_computed, |g| json!(g.ci)),
        "quadratic": g.map_or_else(not_computed, |g| json!(g.quadratic)),
        "koszul_ci": g.map_or_else(not_computed, |g| json!(g.koszul_ci)),
        "e": c.e,
        "log2_bound": c.log2_bound,
        "groebner_basis": ring.gb().generators().iter().map(|p| p.render(ring.var_names())).collect::<Vec<_>>(),
        "standard_monomials": ring.basis().iter().map(|m| m.render(ring.var_names())).collect::<Vec<_>>(),
    })
}

pub fn pair_json(ring: &ArtinianRing, r: &EzdReport) -> Value {
    json!({
        "x": el(ring, &r.x),
        "verdict": r.verdict,
        "twin": opt(&r.twin, |t| el(ring, t)),
        "dim_xR": r.dims.0,
        "dim_ann": r.dims.1,
        "failure": opt(&r.failure, |f| json!(f.as_str())),
    })
}

pub fn strong_json(ring: &ArtinianRing, s: &StrongResult) -> Value {
    let ex = s.exhaustive.as_ref();
    json!({
        "verdict": s.verdict,
        "method": "lift",
        "lift": {
            "verdict": s.lift.verdict,
            "minimal": s.lift.minimal,
            "failing_index": s.lift.failing_index,
            "adjusted_twins": opt(&s.lift.adjusted_twins, |t| els(ring, t)),
        },
        "exhaustive": ex.map_or(Value::Null, |e| json!({
            "verdict": e.verdict,
            "twins_used": if e.used_adjusted_twins { "adjusted" } else { "sequence" },
            "witness": opt(&e.witness, |(s, j)| json!({"subset": s, "index": j})),
        })),
        "agree": s.agree,
    })
}

pub fn sequence_json(ring: &ArtinianRing, r: &SequenceReport) -> Value {
    let mut v = json!({
        "xs": els(ring, &r.xs),
        "is_sequence": r.is_sequence,
        "failing_index": r.failing_index,
        "failure": opt(&r.failure, |f| json!(f.as_str())),
        "twins": els(ring, &r.twins),
        "mu": r.mu,
        "minimal": r.minimal,
    });
    let m = v.as_object_mut().expect("object");
    if let Some(p) = &r.permutable {
        m.insert(
            "permutable".into(),
            json!({
                "verdict": p.verdict,
                "failing_permutation": opt(&p.failing_permutation, |perm| {
                    json!({
                        "positions": perm,
                        "elements": perm.iter().map(|&i| el(ring, &r.xs[i - 1])).collect::<Vec<_>>(),
                    })
                }),
            }),
        );
    }
    if let Some(s) = &r.strong {
        m.insert("strong".into(), strong_json(ring, s));
    }
    v
}

pub fn tor_strong_json(t: &TorStrongResult) -> Value {
    json!({
        "verdict": t.verdict,
        "not_exact_zero_divisor": t.not_ezd,
        "first_nonvanishing": opt(&t.first_nonzero, |(s, j, r)| json!({
            "subset": s, "index": j, "tor1": r.tor1, "tor2": r.tor2,
        })),
    })
}

pub fn tor_json(t: &TorReport) -> Value {
    json!({
        "tor1": t.tor1,
        "tor2": t.tor2,
        "vanishes": t.vanishes(),
        "period": "Tor_{i+2} = Tor_i for i >= 1",
    })
}

pub fn annihilator_json(ring: &ArtinianRing, a: &AnnihilatorCheck) -> Value {
    json!({
        "principal": a.principal,
        "generator": opt(&a.generator, |g| el(ring, g)),
        "double_annihilator": a.double_annihilator_ok,
        "length_match": a.length_ok,
        "holds": a.holds(),
    })
}

pub fn length_sum_json(d: &LengthSumCheck) -> Value {
    json!({"lhs": d.lhs, "rhs": d.rhs, "terms": d.terms, "equal": d.equal})
}

pub fn hit_json(ring: &ArtinianRing, h: &SearchHit) -> Value {
    json!({"xs": els(ring, &h.xs), "twins": els(ring, &h.twins)})
}

pub fn koszul_json(k: &KoszulCriterion) -> Value {
    let prefixes: Vec<Value> = k
        .prefixes
        .iter()
        .map(|p| {
            json!({
                "p": p.p,
                "new_generator": p.new_generator,
                "ok": p.ok,
                "homology": p.homology.iter().map(|h| json!({
                    "degree": h.degree,
                    "length": h.length,
                    "mu": h.mu,
                    "free": h.free,
                    "rank_expected": h.rank_expected,
                    "ok": h.free_of_expected_rank(),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "prefixes": prefixes,
        "koszul_verdict": k.koszul_verdict,
        "sequential_verdict": k.sequential_verdict,
        "agree": k.agree,
    })
}

pub fn ci_quotient_json(c: &CiQuotientCheck) -> Value {
    json!({
        "applicable": c.applicable,
        "is_sequence": c.is_sequence,
        "quotients": c.quotients.iter().map(|q| json!({
            "i": q.i, "length": q.length, "gorenstein": q.gorenstein, "ci": q.ci,
        })).collect::<Vec<_>>(),
        "all_ci": c.all_ci,
        "consistent": c.consistent,
    })
}

pub fn top_sequence_json(c: &TopSequenceCheck) -> Value {
    json!({
        "applicable": c.applicable,
        "generates_max_ideal": c.generates_max_ideal,
        "ci": c.ci,
        "twins_outside_m2": c.twins_outside_m2,
        "holds": c.holds,
    })
}

pub fn quadratic_ci_json(ring: &ArtinianRing, q: &QuadraticCiCheck) -> Value {
    json!({
        "socle_degree": q.socle_degree,
        "koszul_ci": q.koszul_ci,
        "witness": opt(&q.witness, |h| hit_json(ring, h)),
        "equivalence_holds": q.equivalence_holds,
        "implication_holds": q.implication_holds,
        "evidence_agrees": q.evidence_agrees,
    })
}

/// Top-level envelope shared by every command.
pub fn envelope(command: &str, args: Value, ring: Option<&ArtinianRing>, payload: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    m.insert("args".into(), args);
    if let Some(r) = ring {
        m.insert("ring".into(), ring_summary(r));
    }
    m.insert("result".into(), payload);
    Value::Object(m)
}

/// `key.path: value` lines, scalars and arrays of scalars inline.
pub fn to_text(v: &Value) -> String {
    fn scalar_array(a: &[Value]) -> bool {
        a.iter().all(|x| !x.is_object() && !x.is_array())
    }
    fn go(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    go(&p, x, out);
                }
            }
            Value::Array(a) if !scalar_array(a) => {
                for (i, x) in a.iter().enumerate() {
                    go(&format!("{prefix}[{i}]"), x, out);
                }
            }
            Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
            other => out.push_str(&format!("{prefix}: {other}\n")),
        }
    }
    let mut out = String::new();
    go("", v, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_flattening() {
        let v = json!({"a": {"b": [1, 2], "c": "x"}, "d": [{"e": true}]});
        assert_eq!(to_text(&v), "a.b: [1,2]\na.c: x\nd[0].e: true\n");
    }
}
