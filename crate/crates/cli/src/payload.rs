//! Canonical JSON and text renderings of computed values.

use adjoint_core::exactnum::{MultiPoly, Polynomial, Rational, RationalFunction, Ring, RingOps};
use adjoint_core::freealg::FreeElement;
use adjoint_core::Error;
use serde_json::{json, Value};

use crate::command::Point;
use crate::error::CliError;

pub trait Payload: Sized {
    fn to_json(&self) -> Value;
    fn to_text(&self) -> String;
    /// The value plus one; used by `--perturb` to break an identity on purpose.
    fn bump(&self) -> Self;
}

/// A coefficient domain the CLI can compute in.
pub trait Coeff: Ring + Payload {
    fn point(p: &Point, like: &Self) -> Result<Self, CliError>;
}

fn rational_list(p: &Polynomial<Rational>) -> Value {
    Value::Array(p.coeffs().iter().map(Payload::to_json).collect())
}

impl Payload for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn bump(&self) -> Self {
        self.add(&self.one_like())
    }
}

impl Payload for RationalFunction {
    /// `{"num": [...], "den": [...]}`, ascending coefficients in `q`.
    fn to_json(&self) -> Value {
        json!({ "num": rational_list(self.num()), "den": rational_list(self.den()) })
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn bump(&self) -> Self {
        self.add(&self.one_like())
    }
}

impl Payload for MultiPoly {
    /// Terms in ascending graded-lex order, exponent slots `x_1..x_m, t`.
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(mono, c)| json!({ "exponents": mono.exponents(), "coeff": c.to_string() }))
                .collect(),
        )
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn bump(&self) -> Self {
        self.add(&self.one_like())
    }
}

impl<R: Coeff> Payload for Polynomial<R> {
    /// Ascending coefficients in `t`.
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(Payload::to_json).collect())
    }
    fn to_text(&self) -> String {
        self.to_text("t")
    }
    fn bump(&self) -> Self {
        let one = match self.coeffs().first() {
            Some(c) => c.one_like(),
            None => return self.clone(),
        };
        self.add(&Polynomial::constant(one))
    }
}

impl<R: Coeff> Payload for FreeElement<R> {
    fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(w, c)| json!({ "word": self.word_text(w), "coeff": c.to_json() }))
            .collect();
        json!({ "order": self.order(), "terms": terms })
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn bump(&self) -> Self {
        self.add(&FreeElement::y(self.one(), self.order()))
            .expect("same algebra")
    }
}

impl Coeff for Rational {
    fn point(p: &Point, like: &Self) -> Result<Self, CliError> {
        match p {
            Point::Value(r) => Ok(like.embed(r)),
            Point::Q => Err(q_outside(like)),
        }
    }
}

impl Coeff for RationalFunction {
    fn point(p: &Point, like: &Self) -> Result<Self, CliError> {
        match p {
            Point::Value(r) => Ok(like.embed(r)),
            Point::Q => Ok(RationalFunction::q()),
        }
    }
}

impl Coeff for MultiPoly {
    fn point(p: &Point, like: &Self) -> Result<Self, CliError> {
        match p {
            Point::Value(r) => Ok(like.embed(r)),
            Point::Q => Err(q_outside(like)),
        }
    }
}

fn q_outside<R: Ring>(like: &R) -> CliError {
    CliError::Core(Error::SpecDomainMismatch {
        spec: "q".into(),
        domain: like.ring_spec().to_string(),
    })
}
