use adjoint_core::exactnum::{Field, MultiPoly, Rational, RingSpec};
use adjoint_core::freealg::{conjugate_series, verify_general_conjugation, verify_zk};
use adjoint_core::pfk::{
    pfk_convolution, pfk_determinant, pfk_recursion, root_symmetrics, verify_ftxfx, verify_pfk_mult, PfkPolynomial,
};
use adjoint_core::report::IdentityReport;
use adjoint_core::series::{realize_spec, series_invert, wronski_dk, AnySeries, SeriesSpec, TruncatedSeries};
use adjoint_core::special::{
    complete_homogeneous, hall_littlewood_qk, hl_oracle, verify_qexp_factorization, verify_qexp_shift, HLResult,
};
use adjoint_core::Error;
use serde_json::{json, Map, Value};

use crate::command::{Command, Format, Identity, Method, Point, Verb};
use crate::error::CliError;
use crate::payload::{Coeff, Payload};

/// Result of a successful dispatch: `passed` is false when a cross-check or
/// identity failed, in which case `json` carries a counterexample.
#[derive(Clone, PartialEq, Debug)]
pub struct Output {
    pub passed: bool,
    pub json: Value,
    pub text: String,
}

/// What the process should print and return.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Parse, dispatch and render, without touching the process environment.
pub fn run<S: AsRef<str>>(argv: &[S], env_order: Option<&str>) -> Outcome {
    let cmd = match crate::command::parse_command_with(argv, env_order) {
        Ok(cmd) => cmd,
        Err(CliError::Info(text)) => {
            return Outcome {
                status: EXIT_OK,
                stdout: text,
                stderr: String::new(),
            }
        }
        Err(e) => return error_outcome(&e),
    };
    match run_command(&cmd) {
        Ok(out) => {
            let stdout = match cmd.format {
                Format::Json => pretty(&out.json),
                Format::Text => out.text,
            };
            let (status, stderr) = if out.passed {
                (EXIT_OK, String::new())
            } else {
                (EXIT_IDENTITY_FAILED, "adjoint-kit: identity check failed\n".to_string())
            };
            Outcome { status, stdout, stderr }
        }
        Err(e) => error_outcome(&e),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn error_outcome(e: &CliError) -> Outcome {
    let mut stderr = format!("adjoint-kit: error [{}]: {e}\n", e.code());
    if let CliError::Core(Error::VanishingLeadingCoeff { .. }) = e {
        stderr.push_str("hint: use zk path (verify --identity zk)\n");
    }
    Outcome {
        status: EXIT_ERROR,
        stdout: pretty(&e.to_json()),
        stderr,
    }
}

macro_rules! with_series {
    ($any:expr, $f:ident => $body:expr) => {
        match $any {
            AnySeries::Rational($f) => $body,
            AnySeries::RatFunc($f) => $body,
            AnySeries::Multi($f) => $body,
        }
    };
}

macro_rules! with_field_series {
    ($any:expr, $f:ident => $body:expr) => {
        match $any {
            AnySeries::Rational($f) => $body,
            AnySeries::RatFunc($f) => $body,
            AnySeries::Multi(f) => Err(CliError::Core(Error::NotAField(f.ring_spec().to_string()))),
        }
    };
}

/// Execute a validated command.
pub fn run_command(c: &Command) -> Result<Output, CliError> {
    match c.verb {
        Verb::Pfk => with_series!(realize(c)?, f => pfk(c, &f)),
        Verb::Invert => with_series!(realize(c)?, f => invert(c, &f)),
        Verb::Conjugate => with_series!(realize(c)?, f => conjugate(c, &f)),
        Verb::Roots => with_field_series!(realize(c)?, f => roots(c, &f)),
        Verb::Hl => hl(c),
        Verb::Verify => verify(c),
    }
}

fn spec(c: &Command) -> &SeriesSpec {
    c.series.as_ref().expect("validated")
}

/// The series in its natural domain, moved to `Q(q)` when an evaluation
/// point is the symbol `q`.
fn realize(c: &Command) -> Result<AnySeries, CliError> {
    let spec = spec(c);
    let wants_q = [&c.t, &c.s].iter().any(|p| matches!(p, Some(Point::Q)));
    let domain = match spec.kind.natural_domain() {
        RingSpec::Rational if wants_q => RingSpec::RatFuncQ,
        d => d,
    };
    Ok(realize_spec(spec, domain)?)
}

fn point<R: Coeff>(p: &Option<Point>, like: &R) -> Result<Option<R>, CliError> {
    p.as_ref().map(|p| R::point(p, like)).transpose()
}

fn counterexample(identity: &str, series: Option<&str>, k: usize, lhs: Value, rhs: Value) -> Value {
    let mut v = Map::new();
    v.insert("identity".into(), json!(identity));
    if let Some(s) = series {
        v.insert("series".into(), json!(s));
    }
    v.insert("k".into(), json!(k));
    v.insert("lhs".into(), lhs);
    v.insert("rhs".into(), rhs);
    Value::Object(v)
}

fn pfk<R: Coeff>(c: &Command, f: &TruncatedSeries<R>) -> Result<Output, CliError> {
    let k = c.k.expect("validated");
    let like = &f.coeffs()[0];
    let methods: &[Method] = match c.method {
        Method::All => &[Method::Det, Method::Rec, Method::Conv],
        Method::Det => &[Method::Det],
        Method::Rec => &[Method::Rec],
        Method::Conv => &[Method::Conv],
    };
    let results = methods
        .iter()
        .map(|m| match m {
            Method::Det => pfk_determinant(f, k),
            Method::Rec => pfk_recursion(f, k),
            _ => pfk_convolution(f, k),
        })
        .collect::<Result<Vec<PfkPolynomial<R>>, Error>>()?;
    let t = point(&c.t, like)?;

    let mut payloads = Vec::new();
    let mut text = String::new();
    for p in &results {
        let mut obj = json!({ "k": p.k, "coeffs": p.poly.to_json(), "source": p.source.to_string() });
        text.push_str(&format!("{}: {}\n", p.source, Payload::to_text(&p.poly)));
        if let Some(t) = &t {
            let v = p.poly.eval(t);
            obj["value"] = v.to_json();
            text.push_str(&format!("{}: P({}) = {}\n", p.source, t.to_text(), v.to_text()));
        }
        payloads.push(obj);
    }

    let first = &results[0];
    if let Some(bad) = results.iter().find(|p| p.poly != first.poly) {
        let series = spec(c).kind.to_string();
        let cx = counterexample("pfk-paths", Some(&series), k, first.poly.to_json(), bad.poly.to_json());
        text.push_str(&format!("FAIL: {} and {} disagree\n", first.source, bad.source));
        return Ok(Output {
            passed: false,
            json: json!({ "results": payloads, "counterexample": cx }),
            text,
        });
    }
    let json = if payloads.len() == 1 {
        payloads.pop().expect("one")
    } else {
        Value::Array(payloads)
    };
    Ok(Output {
        passed: true,
        json,
        text,
    })
}

fn invert<R: Coeff>(c: &Command, f: &TruncatedSeries<R>) -> Result<Output, CliError> {
    let series = spec(c).kind.to_string();
    let by_det = || {
        (0..=f.order())
            .map(|k| wronski_dk(f, k))
            .collect::<Result<Vec<R>, Error>>()
    };
    let (coeffs, mismatch) = match c.method {
        Method::Det => (by_det()?, None),
        Method::Rec => (series_invert(f)?.coeffs().to_vec(), None),
        _ => {
            let rec = series_invert(f)?.coeffs().to_vec();
            let det = by_det()?;
            let bad = (0..rec.len()).find(|&k| rec[k] != det[k]);
            let mismatch = bad.map(|k| counterexample("invert", Some(&series), k, rec[k].to_json(), det[k].to_json()));
            (rec, mismatch)
        }
    };
    let inv = TruncatedSeries::new(coeffs);
    let mut json = json!({
        "series": series,
        "order": inv.order(),
        "coeffs": Value::Array(inv.coeffs().iter().map(Payload::to_json).collect()),
    });
    let mut text = format!("{inv}\n");
    let passed = mismatch.is_none();
    if let Some(cx) = mismatch {
        text.push_str("FAIL: recursion and determinants disagree\n");
        json["counterexample"] = cx;
    }
    Ok(Output { passed, json, text })
}

fn conjugate<R: Coeff>(c: &Command, f: &TruncatedSeries<R>) -> Result<Output, CliError> {
    let e = conjugate_series(f, c.order)?;
    Ok(Output {
        passed: true,
        json: e.to_json(),
        text: format!("{e}\n"),
    })
}

fn roots<F: Coeff + Field>(c: &Command, f: &TruncatedSeries<F>) -> Result<Output, CliError> {
    let k = c.k.expect("validated");
    let sym = root_symmetrics(f, k)?;
    let lead = &f.coeffs()[k];
    let mut text = format!("a_{k} = {}\n", lead.to_text());
    for (j, e) in sym.e.iter().enumerate() {
        text.push_str(&format!("e_{j} = {}\n", e.to_text()));
    }
    Ok(Output {
        passed: true,
        json: json!({
            "k": k,
            "lead": lead.to_json(),
            "e": Value::Array(sym.e.iter().map(Payload::to_json).collect()),
        }),
        text,
    })
}

fn hl_json(r: &HLResult) -> Value {
    let terms = r.value.to_json();
    json!({ "m": r.m, "k": r.k, "terms": terms })
}

fn hl(c: &Command) -> Result<Output, CliError> {
    let (m, k) = (c.m.expect("validated"), c.k.expect("validated"));
    let r = hall_littlewood_qk(m, k)?;
    let mut out = Output {
        passed: true,
        json: hl_json(&r),
        text: format!("{}\n", r.value),
    };
    if c.method == Method::All {
        let oracle = hl_oracle(m, k)?;
        if oracle.value != r.value {
            let series = format!("prodroots:{m}");
            out.passed = false;
            out.json = json!({
                "result": out.json,
                "counterexample": counterexample("hl", Some(&series), k, r.value.to_json(), oracle.value.to_json()),
            });
            out.text.push_str("FAIL: generating-function oracle disagrees\n");
        }
    }
    Ok(out)
}

/// A report flattened to JSON values, after any perturbation.
struct Flat {
    identity: String,
    checks: Vec<FlatCheck>,
}

struct FlatCheck {
    k: usize,
    note: Option<String>,
    passed: bool,
    lhs: Value,
    rhs: Value,
    lhs_text: String,
    rhs_text: String,
}

/// Collects reports, applying `--perturb` to the first check at that degree.
struct Collector {
    perturb: Option<usize>,
    reports: Vec<Flat>,
}

impl Collector {
    fn add<T: Payload + PartialEq>(&mut self, mut report: IdentityReport<T>) {
        if let Some(k) = self.perturb {
            if let Some(check) = report.checks.iter_mut().find(|ch| ch.k == k) {
                check.rhs = check.rhs.bump();
                self.perturb = None;
            }
        }
        let checks = report
            .checks
            .iter()
            .map(|ch| FlatCheck {
                k: ch.k,
                note: ch.note.clone(),
                passed: ch.passed(),
                lhs: ch.lhs.to_json(),
                rhs: ch.rhs.to_json(),
                lhs_text: ch.lhs.to_text(),
                rhs_text: ch.rhs.to_text(),
            })
            .collect();
        self.reports.push(Flat {
            identity: report.identity.to_string(),
            checks,
        });
    }
}

fn verify(c: &Command) -> Result<Output, CliError> {
    let identity = c.identity.expect("validated");
    let mut col = Collector {
        perturb: c.perturb,
        reports: Vec::new(),
    };
    let series = match identity {
        Identity::QexpFactorization | Identity::QexpShift => "qexp".to_string(),
        Identity::Hl => format!("prodroots:{}", c.m.expect("validated")),
        _ => spec(c).kind.to_string(),
    };
    match identity {
        Identity::Ftxfx => with_series!(realize(c)?, f => {
            let t = point(&c.t, &f.coeffs()[0])?.expect("validated");
            col.add(verify_ftxfx(&f, &t, c.order)?);
        }),
        Identity::PfkMult => with_series!(realize(c)?, f => {
            let like = &f.coeffs()[0];
            let t = point(&c.t, like)?.expect("validated");
            let s = point(&c.s, like)?.expect("validated");
            col.add(verify_pfk_mult(&f, &s, &t, c.k.expect("validated"))?);
        }),
        Identity::Conjugation => with_field_series!(realize(c)?, f => {
            let rep = verify_general_conjugation(&f, c.order)?;
            col.add(rep.adjoint);
            col.add(rep.zk);
            Ok::<(), CliError>(())
        })?,
        Identity::Zk => with_series!(realize(c)?, f => col.add(verify_zk(&f, c.order)?)),
        Identity::QexpFactorization => {
            let rep = verify_qexp_factorization(c.k.unwrap_or(c.order))?;
            col.add(rep.det);
            col.add(rep.rec);
            col.add(rep.conv);
            col.add(rep.bordered_det);
            col.add(rep.vanishing);
            col.add(rep.classical_limit);
        }
        Identity::QexpShift => {
            let rep = verify_qexp_shift(c.n.expect("validated"), c.order)?;
            col.add(rep.shift);
            col.add(rep.product);
            col.add(rep.pfk_values);
        }
        Identity::Hl => {
            let (m, k) = (c.m.expect("validated"), c.k.expect("validated"));
            for rep in hl_reports(m, k)? {
                col.add(rep);
            }
        }
    }
    Ok(render_verify(c, identity, &series, col.reports))
}

fn hl_reports(m: usize, k: usize) -> Result<Vec<IdentityReport<MultiPoly>>, CliError> {
    let mut oracle = IdentityReport::new("hl/oracle");
    let mut t_zero = IdentityReport::new("hl/t=0");
    let mut stable = IdentityReport::new("hl/stability");
    for j in 0..=k {
        let q = hall_littlewood_qk(m, j)?.value;
        let o = hl_oracle(m, j)?.value;
        t_zero.push(j, o.eval_t(&Rational::zero()), complete_homogeneous(m, j));
        oracle.push(j, q.clone(), o);
        stable.push(j, hall_littlewood_qk(m + 1, j)?.value.drop_x(m + 1), q);
    }
    Ok(vec![oracle, t_zero, stable])
}

fn render_verify(c: &Command, identity: Identity, series: &str, reports: Vec<Flat>) -> Output {
    let name = identity_name(identity);
    let passed = reports.iter().all(|r| r.checks.iter().all(|ch| ch.passed));
    let mut json = Map::new();
    json.insert("identity".into(), json!(name));
    json.insert("series".into(), json!(series));
    if c.series.is_some() || identity == Identity::QexpShift {
        json.insert("order".into(), json!(c.order));
    }
    json.insert("passed".into(), json!(passed));
    let mut text = String::new();
    let mut out_reports = Vec::new();
    let mut first_failure = None;
    for r in &reports {
        let ok = r.checks.iter().filter(|ch| ch.passed).count();
        text.push_str(&format!("{}: {}/{} checks pass\n", r.identity, ok, r.checks.len()));
        let checks: Vec<Value> = r
            .checks
            .iter()
            .map(|ch| {
                let mut v = Map::new();
                v.insert("k".into(), json!(ch.k));
                if let Some(note) = &ch.note {
                    v.insert("note".into(), json!(note));
                }
                v.insert("passed".into(), json!(ch.passed));
                Value::Object(v)
            })
            .collect();
        out_reports.push(json!({ "identity": r.identity, "passed": ok == r.checks.len(), "checks": checks }));
        if first_failure.is_none() {
            first_failure = r.checks.iter().find(|ch| !ch.passed).map(|ch| (r, ch));
        }
    }
    json.insert("reports".into(), Value::Array(out_reports));
    match first_failure {
        Some((r, ch)) => {
            let mut cx = counterexample(&r.identity, Some(series), ch.k, ch.lhs.clone(), ch.rhs.clone());
            if let Some(note) = &ch.note {
                cx["note"] = json!(note);
            }
            json.insert("counterexample".into(), cx);
            let at = match &ch.note {
                Some(note) => format!("k={} {note}", ch.k),
                None => format!("k={}", ch.k),
            };
            text.push_str(&format!(
                "FAIL {} on {series} at {at}\n  lhs: {}\n  rhs: {}\n",
                r.identity, ch.lhs_text, ch.rhs_text
            ));
        }
        None => text.push_str("PASS\n"),
    }
    Output {
        passed,
        json: Value::Object(json),
        text,
    }
}

fn identity_name(id: Identity) -> &'static str {
    match id {
        Identity::Ftxfx => "ftxfx",
        Identity::PfkMult => "pfk-mult",
        Identity::Conjugation => "conjugation",
        Identity::Zk => "zk",
        Identity::QexpFactorization => "qexp-factorization",
        Identity::QexpShift => "qexp-shift",
        Identity::Hl => "hl",
    }
}
