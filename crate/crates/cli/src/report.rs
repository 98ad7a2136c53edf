//! Per-command verdicts in text and JSON form.

use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{json, Map, Value};
use skolem_core::galois::{octic_palindrome_galois, octic_palindrome_galois_relaxed, FrobeniusSample};
use skolem_core::poly::squarefree_part;
use skolem_core::roots::{isolate_roots, modulus_partition};
use skolem_core::skolem::{
    family_generate, lrs_from_loop, positivity_check_with_cap, skolem_analyze, Backward, ClassificationReport,
    LinearLoop, LrsSpec, PositivityVerdict, SkolemReport,
};
use skolem_core::spectral::{
    hypothesis_check, search_box_cancellable, two_circle_analysis, DegeneracyWitness, RadiusRelation,
};
use skolem_core::{CancelToken, Error, IntPolynomial};

use crate::{big, error_code, exit, poly_json, Command, Failure, SearchArgs, SCHEMA_VERSION};

/// A successful verdict.
pub(crate) struct Done {
    verdict: Value,
    text: String,
    complete: bool,
}

/// The outcome of one command, renderable as text or JSON.
#[derive(Debug, Clone)]
pub struct Report {
    command: String,
    input: Value,
    code: i32,
    status: Result<(Value, String, bool), (String, String)>,
    elapsed: Duration,
}

impl Report {
    pub(crate) fn new(command: &str, input: Value, outcome: Result<Done, Failure>, elapsed: Duration) -> Self {
        let (code, status) = match outcome {
            Ok(d) => (if d.complete { exit::OK } else { exit::INCOMPLETE }, Ok((d.verdict, d.text, d.complete))),
            Err(f) => (f.code, Err((f.kind, f.message))),
        };
        Report { command: command.into(), input, code, status, elapsed }
    }

    pub fn exit_code(&self) -> i32 {
        self.code
    }

    /// `Some(complete)` for verdicts and precision failures, `None` for other errors.
    pub fn complete(&self) -> Option<bool> {
        match &self.status {
            Ok((_, _, c)) => Some(*c),
            Err(_) if self.code == exit::INCOMPLETE => Some(false),
            Err(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema_version".into(), json!(SCHEMA_VERSION));
        m.insert("command".into(), json!(self.command));
        m.insert("input".into(), self.input.clone());
        m.insert("exit_code".into(), big(self.code));
        match &self.status {
            Ok((v, _, _)) => {
                m.insert("status".into(), json!("ok"));
                m.insert("verdict".into(), v.clone());
            }
            Err((kind, message)) => {
                m.insert("status".into(), json!("error"));
                m.insert("error".into(), json!({ "kind": kind, "message": message }));
            }
        }
        m.insert("complete".into(), self.complete().map_or(Value::Null, Value::Bool));
        m.insert("timings".into(), json!({ "total_ms": format!("{:.3}", self.elapsed.as_secs_f64() * 1e3) }));
        Value::Object(m)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("json values serialize")
    }

    pub fn text(&self) -> String {
        match &self.status {
            Ok((_, t, _)) => t.clone(),
            Err((kind, message)) => format!("error ({kind}): {message}\n"),
        }
    }
}

/// The report with its `timings` field removed, for comparisons across runs.
pub fn strip_timings(mut v: Value) -> Value {
    if let Some(m) = v.as_object_mut() {
        m.remove("timings");
    }
    v
}

pub(crate) fn input_echo(cmd: &Command) -> Value {
    match cmd {
        Command::Analyze(a) => json!({ "polynomial": a.polynomial }),
        Command::Skolem(a) => json!({ "file": a.file.display().to_string(), "search": big(a.search) }),
        Command::Positivity(a) => json!({ "file": a.file.display().to_string(), "cap": big(a.cap) }),
        Command::Galois(a) => json!({ "polynomial": a.polynomial, "relaxed": a.relaxed }),
        Command::Family(a) => json!({ "polynomial": a.polynomial, "count": big(a.count) }),
        Command::Search(a) => json!({
            "degree": big(a.degree),
            "height": big(a.height),
            "constants": resolve_constants(a).iter().map(big).collect::<Vec<_>>(),
            "palindromic": a.palindromic,
            "predicate": predicate_name(a),
        }),
        Command::Loop(a) => json!({ "file": a.file.display().to_string(), "search": big(a.search) }),
    }
}

fn predicate_name(a: &SearchArgs) -> &'static str {
    match a.predicate {
        crate::PredicateArg::H1h2 => "h1h2",
        crate::PredicateArg::Order10 => "order10",
    }
}

fn resolve_constants(a: &SearchArgs) -> Vec<i64> {
    if a.unit_constant {
        vec![-1, 1]
    } else if !a.constants.is_empty() {
        a.constants.clone()
    } else {
        let h = a.height.min(i64::MAX as u64) as i64;
        (-h..=h).filter(|&c| c != 0).collect()
    }
}

fn witnesses_json(ws: &[DegeneracyWitness]) -> Value {
    ws.iter().map(|w| json!({ "pair": [big(w.pair.0), big(w.pair.1)], "order": big(w.order) })).collect()
}

fn witnesses_text(ws: &[DegeneracyWitness]) -> String {
    if ws.is_empty() {
        return "none".into();
    }
    ws.iter().map(|w| format!("({},{}) order {}", w.pair.0, w.pair.1, w.order)).collect::<Vec<_>>().join(", ")
}

fn fmt_f64(x: f64) -> String {
    format!("{x:.12}")
}

fn is_precondition(e: &Error) -> bool {
    error_code(e) == exit::PRECONDITION
}

pub(crate) fn analyze(f: &IntPolynomial) -> Result<Done, Failure> {
    let hyp = hypothesis_check(f)?;
    let sf = squarefree_part(f)?;
    let mut text = String::new();
    writeln!(text, "polynomial: {f}").unwrap();
    let (roots, classes) = if sf.degree() == 0 {
        (Vec::new(), Vec::new())
    } else {
        let rs = isolate_roots(&sf)?;
        let part = modulus_partition(&rs)?;
        let roots: Vec<Value> = rs
            .approximations()
            .iter()
            .map(|z| json!({ "re": fmt_f64(z.re), "im": fmt_f64(z.im) }))
            .collect();
        let classes: Vec<(f64, Vec<usize>)> = part
            .classes
            .iter()
            .map(|c| (c.sq_modulus.midpoint().to_f64().sqrt(), c.members.clone()))
            .collect();
        (roots, classes)
    };
    writeln!(text, "squarefree part: {sf}").unwrap();
    writeln!(text, "modulus classes: {}", classes.len()).unwrap();
    for (m, members) in &classes {
        writeln!(text, "  |z| ~ {} : {} roots {:?}", fmt_f64(*m), members.len(), members).unwrap();
    }
    writeln!(text, "dominant roots: {}", hyp.dominant_count).unwrap();
    writeln!(text, "H1: {}  H2: {}", hyp.h1, hyp.h2).unwrap();
    writeln!(text, "degeneracy witnesses: {}", witnesses_text(&hyp.witnesses)).unwrap();
    let circles = match two_circle_analysis(f) {
        Ok(t) => {
            let rel = match t.radius_relation {
                RadiusRelation::OuterTimesInnerIsOne => "OuterTimesInnerIsOne",
                RadiusRelation::OuterIsInnerPowMinusHalf => "OuterIsInnerPowMinusHalf",
                RadiusRelation::None => "None",
            };
            writeln!(
                text,
                "circles: {} sizes {:?} relation {} consistent {}",
                t.circle_count, t.class_sizes, rel, t.consistent_shape
            )
            .unwrap();
            json!({
                "applicable": true,
                "circle_count": big(t.circle_count),
                "class_sizes": t.class_sizes.iter().map(big).collect::<Vec<_>>(),
                "radius_relation": rel,
                "consistent_shape": t.consistent_shape,
            })
        }
        Err(e) if is_precondition(&e) => {
            writeln!(text, "circles: not applicable ({e})").unwrap();
            json!({ "applicable": false, "reason": e.to_string() })
        }
        Err(e) => return Err(e.into()),
    };
    let verdict = json!({
        "h1": hyp.h1,
        "h2": hyp.h2,
        "hard_instance": hyp.h1 && hyp.h2,
        "dominant_count": big(hyp.dominant_count),
        "witnesses": witnesses_json(&hyp.witnesses),
        "squarefree_part": poly_json(&sf),
        "roots": roots,
        "modulus_classes": classes
            .iter()
            .map(|(m, members)| json!({
                "modulus": fmt_f64(*m),
                "members": members.iter().map(big).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>(),
        "two_circle": circles,
    });
    Ok(Done { verdict, text, complete: true })
}

fn classification_json(c: &ClassificationReport) -> Value {
    json!({
        "class": format!("{:?}", c.class),
        "minimal_poly": poly_json(&c.minimal_poly),
        "order": big(c.order),
        "reversible": c.reversible,
        "degenerate": c.degenerate,
        "witnesses": witnesses_json(&c.witnesses),
        "dominant_count": big(c.dominant_count),
        "dominant_simple": c.dominant_simple,
        "zero_everywhere": c.zero_everywhere,
        "flags": {
            "order_le7_reversible_guarantee": c.flags.order_le7_reversible_guarantee,
            "positivity_decidable_order_le10": c.flags.positivity_decidable_order_le10,
            "unit_norm_order5_guarantee": c.flags.unit_norm_order5_guarantee,
        },
    })
}

fn spec_json(s: &LrsSpec) -> Value {
    json!({
        "rec": s.rec_coeffs().iter().map(big).collect::<Vec<_>>(),
        "init": s.inits().iter().map(big).collect::<Vec<_>>(),
    })
}

fn skolem_body(r: &SkolemReport, text: &mut String) -> Value {
    let c = &r.classification;
    writeln!(text, "class: {:?}", c.class).unwrap();
    writeln!(text, "minimal polynomial: {} (order {})", c.minimal_poly, c.order).unwrap();
    writeln!(text, "reversible: {}  degenerate: {}", c.reversible, c.degenerate).unwrap();
    writeln!(text, "dominant roots: {} (simple: {})", c.dominant_count, c.dominant_simple).unwrap();
    if c.degenerate {
        writeln!(text, "degeneracy witnesses: {}", witnesses_text(&c.witnesses)).unwrap();
    }
    writeln!(text, "method: {:?}", r.method).unwrap();
    if let Some((m, res)) = &r.progressions {
        writeln!(text, "zero progressions: n mod {m} in {res:?}").unwrap();
    }
    writeln!(text, "zeros (n >= 0): {:?}", r.zeros.nonnegative).unwrap();
    if r.zeros.zero_at_origin() {
        writeln!(text, "zero at n = 0").unwrap();
    }
    let backward = match r.zeros.backward {
        Backward::NotReversible => {
            writeln!(text, "zeros (n < 0): not reversible").unwrap();
            json!({ "kind": "not_reversible" })
        }
        Backward::UpTo(b) => {
            writeln!(text, "zeros (n < 0, searched to -{b}): {:?}", r.zeros.negative).unwrap();
            json!({ "kind": "up_to", "bound": big(b) })
        }
        Backward::Complete => {
            writeln!(text, "zeros (n < 0, complete): {:?}", r.zeros.negative).unwrap();
            json!({ "kind": "complete" })
        }
    };
    writeln!(text, "complete: {}", r.complete).unwrap();
    json!({
        "classification": classification_json(c),
        "method": format!("{:?}", r.method),
        "progressions": r.progressions.as_ref().map(|(m, res)| json!({
            "modulus": big(m),
            "residues": res.iter().map(big).collect::<Vec<_>>(),
        })),
        "zeros": {
            "nonnegative": r.zeros.nonnegative.iter().map(big).collect::<Vec<_>>(),
            "negative": r.zeros.negative.iter().map(big).collect::<Vec<_>>(),
            "zero_at_origin": r.zeros.zero_at_origin(),
            "backward": backward,
        },
        "complete": r.complete,
        "search_bound": big(r.search_bound),
    })
}

pub(crate) fn skolem(spec: &LrsSpec, bound: u64, cap: u32, cancel: &CancelToken) -> Result<Done, Failure> {
    let r = skolem_analyze(spec, bound, cap, cancel)?;
    let mut text = String::new();
    let mut verdict = skolem_body(&r, &mut text);
    verdict["spec"] = spec_json(spec);
    Ok(Done { verdict, text, complete: r.complete })
}

pub(crate) fn positivity(spec: &LrsSpec, cap: u64, precision_cap: u32) -> Result<Done, Failure> {
    let v = positivity_check_with_cap(spec, cap, precision_cap)?;
    let (verdict, text, complete) = match v {
        PositivityVerdict::Positive => (json!({ "kind": "positive" }), "positive: every term is nonnegative\n".into(), true),
        PositivityVerdict::NotPositive(n) => (
            json!({ "kind": "not_positive", "first_negative": big(n) }),
            format!("not positive: X_{n} < 0\n"),
            true,
        ),
        PositivityVerdict::BoundedOnly { checked } => (
            json!({ "kind": "bounded_only", "checked": big(checked) }),
            format!("no negative term among the first {checked}; positivity not certified\n"),
            false,
        ),
    };
    let mut verdict = verdict;
    verdict["spec"] = spec_json(spec);
    Ok(Done { verdict, text, complete })
}

fn frobenius_json(s: &[FrobeniusSample]) -> Value {
    s.iter()
        .map(|x| json!({
            "prime": big(x.prime),
            "degrees": x.degrees.as_ref().map(|d| d.iter().map(big).collect::<Vec<_>>()),
        }))
        .collect()
}

pub(crate) fn galois(f: &IntPolynomial, relaxed: bool) -> Result<Done, Failure> {
    let mut text = String::new();
    if !relaxed {
        let r = octic_palindrome_galois(f)?;
        writeln!(text, "quartic: {}", r.quartic).unwrap();
        writeln!(text, "quartic group: {}", r.quartic_group).unwrap();
        writeln!(text, "full group: {}", r.full_group).unwrap();
        let verdict = json!({
            "quartic": poly_json(&r.quartic),
            "quartic_group": r.quartic_group.to_string(),
            "full_group": r.full_group.to_string(),
            "frobenius_samples": frobenius_json(&r.frobenius_samples),
        });
        return Ok(Done { verdict, text, complete: true });
    }
    let r = octic_palindrome_galois_relaxed(f)?;
    writeln!(text, "quartic: {}", r.quartic).unwrap();
    writeln!(text, "quartic group: {}", r.quartic_group).unwrap();
    writeln!(text, "H1: {}  H2: {}", r.hypotheses.h1, r.hypotheses.h2).unwrap();
    let note = match r.full_group {
        Some(g) => {
            writeln!(text, "full group: {g}").unwrap();
            Value::Null
        }
        None => {
            writeln!(text, "product-group lift not applicable (H1/H2 fail)").unwrap();
            json!("product-group lift not applicable (H1/H2 fail)")
        }
    };
    let verdict = json!({
        "quartic": poly_json(&r.quartic),
        "quartic_group": r.quartic_group.to_string(),
        "h1": r.hypotheses.h1,
        "h2": r.hypotheses.h2,
        "full_group": r.full_group.map(|g| g.to_string()),
        "note": note,
    });
    Ok(Done { verdict, text, complete: true })
}

pub(crate) fn family(seed: &IntPolynomial, count: u32) -> Result<Done, Failure> {
    let fam = family_generate(seed, count)?;
    let mut text = String::new();
    for m in &fam.members {
        writeln!(text, "power {}: {}  (H1 {}, H2 {}, palindromic {})", m.power, m.poly, m.h1, m.h2, m.palindromic)
            .unwrap();
    }
    writeln!(text, "pairwise distinct: {}", fam.pairwise_distinct).unwrap();
    let verdict = json!({
        "members": fam.members.iter().map(|m| json!({
            "power": big(m.power),
            "polynomial": poly_json(&m.poly),
            "palindromic": m.palindromic,
            "h1": m.h1,
            "h2": m.h2,
        })).collect::<Vec<_>>(),
        "pairwise_distinct": fam.pairwise_distinct,
    });
    Ok(Done { verdict, text, complete: true })
}

pub(crate) fn search(a: &SearchArgs, cancel: &CancelToken) -> Result<Done, Failure> {
    let constants = resolve_constants(a);
    let hits = search_box_cancellable(a.degree, a.height, &constants, a.palindromic, a.predicate.into(), cancel)?;
    let mut text = String::new();
    writeln!(text, "matches: {}", hits.len()).unwrap();
    for h in &hits {
        writeln!(text, "  {h}").unwrap();
    }
    let verdict = json!({
        "count": big(hits.len()),
        "matches": hits.iter().map(poly_json).collect::<Vec<_>>(),
    });
    Ok(Done { verdict, text, complete: true })
}

pub(crate) fn linear_loop(l: &LinearLoop, bound: u64, cap: u32, cancel: &CancelToken) -> Result<Done, Failure> {
    let spec = lrs_from_loop(l)?;
    let r = skolem_analyze(&spec, bound, cap, cancel)?;
    let mut text = String::new();
    let det = l.determinant();
    writeln!(text, "dimension: {}  det A: {}  unimodular: {}", l.dimension(), det, l.is_unimodular()).unwrap();
    writeln!(text, "characteristic polynomial: {}", l.char_poly()).unwrap();
    let mut verdict = skolem_body(&r, &mut text);
    let first = r
        .zeros
        .nonnegative
        .first()
        .copied()
        .into_iter()
        .chain(r.progressions.iter().flat_map(|(_, res)| res.first().copied()))
        .min();
    let terminates = match first {
        Some(n) => {
            writeln!(text, "terminates after {n} iterations").unwrap();
            json!({ "terminates": true, "iterations": big(n) })
        }
        None if r.complete => {
            writeln!(text, "does not terminate").unwrap();
            json!({ "terminates": false })
        }
        None => {
            writeln!(text, "termination unknown: no exit within {bound} iterations").unwrap();
            json!({ "terminates": Value::Null })
        }
    };
    verdict["loop"] = json!({
        "dimension": big(l.dimension()),
        "determinant": big(det),
        "unimodular": l.is_unimodular(),
        "char_poly": poly_json(&l.char_poly()),
        "spec": spec_json(&spec),
    });
    verdict["termination"] = terminates;
    Ok(Done { verdict, text, complete: r.complete })
}
