use std::fmt;
use std::str::FromStr;

use adjoint_core::exactnum::Rational;
use adjoint_core::series::{SeriesKind, SeriesSpec};
use clap::{Parser, ValueEnum};

use crate::error::CliError;

pub const DEFAULT_ORDER: usize = 8;
pub const ORDER_ENV: &str = "ADJOINT_KIT_ORDER";

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verb {
    Pfk,
    Invert,
    Conjugate,
    Roots,
    Hl,
    Verify,
}

impl Verb {
    pub const ALL: [Verb; 6] = [
        Verb::Pfk,
        Verb::Invert,
        Verb::Conjugate,
        Verb::Roots,
        Verb::Hl,
        Verb::Verify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Verb::Pfk => "pfk",
            Verb::Invert => "invert",
            Verb::Conjugate => "conjugate",
            Verb::Roots => "roots",
            Verb::Hl => "hl",
            Verb::Verify => "verify",
        }
    }
}

impl FromStr for Verb {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Verb::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| CliError::UnknownVerb(s.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Method {
    Det,
    Rec,
    Conv,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Identity {
    Ftxfx,
    PfkMult,
    Conjugation,
    Zk,
    QexpFactorization,
    QexpShift,
    Hl,
}

fn value_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

/// An evaluation point: an exact rational or the indeterminate `q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Point {
    Value(Rational),
    Q,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Value(r) => write!(f, "{r}"),
            Point::Q => f.write_str("q"),
        }
    }
}

impl FromStr for Point {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s == "q" {
            return Ok(Point::Q);
        }
        s.parse()
            .map(Point::Value)
            .map_err(|_| CliError::BadRational(s.to_string()))
    }
}

/// A validated invocation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Command {
    pub verb: Verb,
    pub identity: Option<Identity>,
    pub series: Option<SeriesSpec>,
    pub order: usize,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub t: Option<Point>,
    pub s: Option<Point>,
    pub method: Method,
    pub format: Format,
    pub perturb: Option<usize>,
}

#[derive(Parser, Debug)]
#[command(
    name = "adjoint-kit",
    version,
    about = "Exact P-polynomials, series inverses, q-bracket conjugations and Hall-Littlewood checks",
    after_help = "Exit status: 0 success, 1 identity failure (counterexample on stdout), 2 usage or domain error."
)]
struct RawArgs {
    /// pfk | invert | conjugate | roots | hl | verify
    verb: String,
    /// exp | qexp | geom | poly:1,c1,c2,... | prodroots:m
    #[arg(long)]
    series: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    /// Truncation order N (default 8, or $ADJOINT_KIT_ORDER)
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Evaluation point: a rational such as -3/2, or q
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, value_enum)]
    identity: Option<Identity>,
    /// Number of x variables (hl)
    #[arg(long)]
    m: Option<usize>,
    /// Shift exponent (qexp-shift)
    #[arg(long)]
    n: Option<usize>,
    /// Add one to the right-hand side at this degree; exercises the failure path
    #[arg(long)]
    perturb: Option<usize>,
}

/// Parse arguments (without the program name), taking the default order
/// from the process environment.
pub fn parse_command<S: AsRef<str>>(argv: &[S]) -> Result<Command, CliError> {
    let env = std::env::var(ORDER_ENV).ok();
    parse_command_with(argv, env.as_deref())
}

pub fn parse_command_with<S: AsRef<str>>(argv: &[S], env_order: Option<&str>) -> Result<Command, CliError> {
    let tokens = std::iter::once("adjoint-kit").chain(argv.iter().map(AsRef::as_ref));
    let raw = RawArgs::try_parse_from(tokens).map_err(CliError::from_clap)?;
    let verb: Verb = raw.verb.parse()?;

    let order = match (raw.order, env_order) {
        (Some(n), _) => n,
        (None, Some(v)) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{ORDER_ENV} must be a non-negative integer, got {v:?}")))?,
        (None, None) => DEFAULT_ORDER,
    };
    let series = match &raw.series {
        Some(text) => Some(SeriesSpec {
            kind: text.parse::<SeriesKind>().map_err(|e| CliError::BadSpec {
                token: text.clone(),
                position: e.position,
                message: e.message,
            })?,
            order,
        }),
        None => None,
    };
    let t = raw.t.as_deref().map(str::parse).transpose()?;
    let s = raw.s.as_deref().map(str::parse).transpose()?;

    let cmd = Command {
        verb,
        identity: raw.identity,
        series,
        order,
        k: raw.k,
        m: raw.m,
        n: raw.n,
        t,
        s,
        method: raw.method.unwrap_or(Method::All),
        format: raw.format.unwrap_or(Format::Json),
        perturb: raw.perturb,
    };
    cmd.validate()?;
    Ok(cmd)
}

impl Command {
    fn need_series(&self) -> Result<&SeriesSpec, CliError> {
        self.series
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("{} needs --series", self.label())))
    }

    fn need<T: Copy>(&self, v: Option<T>, flag: &str) -> Result<T, CliError> {
        v.ok_or_else(|| CliError::Usage(format!("{} needs --{flag}", self.label())))
    }

    fn label(&self) -> String {
        match self.identity {
            Some(id) if self.verb == Verb::Verify => format!("verify {}", value_name(&id)),
            _ => self.verb.name().to_string(),
        }
    }

    fn fits(&self, k: usize) -> Result<(), CliError> {
        if k > self.order {
            return Err(CliError::OrderTooSmall { k, order: self.order });
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.perturb.is_some() && self.verb != Verb::Verify {
            return Err(CliError::Usage("--perturb applies to verify only".into()));
        }
        if self.verb == Verb::Invert && self.method == Method::Conv {
            return Err(CliError::Usage("invert supports --method det, rec or all".into()));
        }
        match self.verb {
            Verb::Pfk | Verb::Roots => {
                self.need_series()?;
                self.fits(self.need(self.k, "k")?)
            }
            Verb::Invert | Verb::Conjugate => self.need_series().map(|_| ()),
            Verb::Hl => {
                self.need_m()?;
                self.need(self.k, "k").map(|_| ())
            }
            Verb::Verify => match self.need(self.identity, "identity")? {
                Identity::Ftxfx => {
                    self.need_series()?;
                    self.need_point(&self.t, "t")
                }
                Identity::PfkMult => {
                    self.need_series()?;
                    self.need_point(&self.t, "t")?;
                    self.need_point(&self.s, "s")?;
                    self.fits(self.need(self.k, "k")?)
                }
                Identity::Conjugation | Identity::Zk => self.need_series().map(|_| ()),
                Identity::QexpFactorization => {
                    let k = self.k.unwrap_or(self.order);
                    if k == 0 {
                        return Err(CliError::Usage("qexp-factorization needs --k >= 1".into()));
                    }
                    self.fits(k)
                }
                Identity::QexpShift => self.fits(self.need(self.n, "n")?),
                Identity::Hl => {
                    self.need_m()?;
                    self.need(self.k, "k").map(|_| ())
                }
            },
        }
    }

    fn need_point(&self, p: &Option<Point>, flag: &str) -> Result<(), CliError> {
        p.as_ref()
            .map(|_| ())
            .ok_or_else(|| CliError::Usage(format!("{} needs --{flag}", self.label())))
    }

    fn need_m(&self) -> Result<usize, CliError> {
        match self.need(self.m, "m")? {
            0 => Err(CliError::Usage("--m must be at least 1".into())),
            m => Ok(m),
        }
    }

    /// The fully resolved argument list; parsing it yields `self` again
    /// whatever the environment.
    pub fn to_argv(&self) -> Vec<String> {
        let mut out = vec![self.verb.name().to_string()];
        let mut flag = |name: &str, value: String| {
            out.push(format!("--{name}"));
            out.push(value);
        };
        if let Some(id) = &self.identity {
            flag("identity", value_name(id));
        }
        if let Some(spec) = &self.series {
            flag("series", spec.kind.to_string());
        }
        flag("order", self.order.to_string());
        for (name, v) in [("k", self.k), ("m", self.m), ("n", self.n)] {
            if let Some(v) = v {
                flag(name, v.to_string());
            }
        }
        if let Some(t) = &self.t {
            flag("t", t.to_string());
        }
        if let Some(s) = &self.s {
            flag("s", s.to_string());
        }
        flag("method", value_name(&self.method));
        flag("format", value_name(&self.format));
        if let Some(p) = self.perturb {
            flag("perturb", p.to_string());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Command, CliError> {
        parse_command_with(args, None)
    }

    #[test]
    fn pfk_defaults() {
        let c = parse(&["pfk", "--series", "exp", "--k", "3"]).unwrap();
        assert_eq!(c.verb, Verb::Pfk);
        assert_eq!(c.series.as_ref().unwrap().kind, SeriesKind::Exp);
        assert_eq!(c.k, Some(3));
        assert_eq!(c.method, Method::All);
        assert_eq!(c.order, 8);
        assert_eq!(c.format, Format::Json);
    }

    #[test]
    fn verify_explicit_series() {
        let c = parse(&[
            "verify",
            "--identity",
            "conjugation",
            "--series",
            "poly:1,1,1/2",
            "--order",
            "6",
        ])
        .unwrap();
        assert_eq!(c.identity, Some(Identity::Conjugation));
        let spec = c.series.unwrap();
        assert_eq!(
            spec.kind,
            SeriesKind::Explicit(vec![Rational::one(), Rational::one(), "1/2".parse().unwrap()])
        );
        assert_eq!(spec.order, 6);
    }

    #[test]
    fn bad_spec_carries_position() {
        let e = parse(&["pfk", "--series", "poly:2,1"]).unwrap_err();
        assert_eq!(e.code(), "BAD_SPEC");
        assert!(e.to_string().contains("leading coefficient must be 1"), "{e}");
        assert!(matches!(e, CliError::BadSpec { position: 5, .. }));
    }

    #[test]
    fn error_codes() {
        assert_eq!(parse(&["frobnicate"]).unwrap_err().code(), "UNKNOWN_VERB");
        assert_eq!(
            parse(&["verify", "--identity", "ftxfx", "--series", "exp", "--t", "1/0"])
                .unwrap_err()
                .code(),
            "BAD_RATIONAL"
        );
        assert_eq!(
            parse(&["pfk", "--series", "exp", "--k", "9"]).unwrap_err().code(),
            "ORDER_TOO_SMALL"
        );
        assert_eq!(parse(&["pfk", "--series", "exp"]).unwrap_err().code(), "USAGE");
        assert_eq!(
            parse(&["pfk", "--series", "exp", "--k", "1", "--bogus"])
                .unwrap_err()
                .code(),
            "USAGE"
        );
    }

    #[test]
    fn environment_sets_default_order() {
        let c = parse_command_with(&["invert", "--series", "geom"], Some("12")).unwrap();
        assert_eq!(c.order, 12);
        let c = parse_command_with(&["invert", "--series", "geom", "--order", "3"], Some("12")).unwrap();
        assert_eq!(c.order, 3);
        assert_eq!(
            parse_command_with(&["invert", "--series", "geom"], Some("x"))
                .unwrap_err()
                .code(),
            "USAGE"
        );
    }

    #[test]
    fn points() {
        let c = parse(&[
            "verify",
            "--identity",
            "pfk-mult",
            "--series",
            "exp",
            "--t",
            "q",
            "--s",
            "-2/3",
            "--k",
            "2",
        ])
        .unwrap();
        assert_eq!(c.t, Some(Point::Q));
        assert_eq!(c.s, Some(Point::Value("-2/3".parse().unwrap())));
    }

    #[test]
    fn resolved_form_round_trips() {
        let cases: &[&[&str]] = &[
            &["pfk", "--series", "qexp", "--k", "2", "--method", "det", "--t", "q"],
            &[
                "verify",
                "--identity",
                "pfk-mult",
                "--series",
                "poly:1,-1/2,3",
                "--t",
                "2",
                "--s",
                "-1",
                "--k",
                "4",
            ],
            &["hl", "--m", "2", "--k", "3", "--format", "text"],
            &["verify", "--identity", "qexp-shift", "--n", "2", "--perturb", "1"],
            &["conjugate", "--series", "prodroots:2", "--order", "3"],
        ];
        for args in cases {
            let c = parse_command_with(args, Some("5")).unwrap();
            let again = parse_command_with(&c.to_argv(), Some("7")).unwrap();
            assert_eq!(c, again, "{args:?}");
        }
    }
}
