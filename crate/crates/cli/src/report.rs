use serde::Serialize;
use serde_json::{json, Value};
use num_bigint::BigInt;
use tb_core::textio::{format_monomial, format_poly, format_term};
use tb_core::{CoefIdeal, Monomial, MonomialOrder, Polynomial, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
    Refuted,
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Refuted => 1,
            Status::Error => 2,
            Status::Inconclusive => 3,
        }
    }

    /// Severity used to pick the batch exit code.
    fn severity(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Inconclusive => 1,
            Status::Refuted => 2,
            Status::Error => 3,
        }
    }

    pub fn worst(self, other: Status) -> Status {
        if other.severity() > self.severity() {
            other
        } else {
            self
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

impl Report {
    pub fn error(command: &str, message: String) -> Report {
        Report {
            command: command.to_string(),
            status: Status::Error,
            payload: Value::Null,
            diagnostics: vec![message],
        }
    }
}

/// Renders library values with the problem's variable names and order.
pub struct Render<'a> {
    pub vars: &'a [String],
    pub order: &'a MonomialOrder,
}

impl Render<'_> {
    pub fn poly(&self, f: &Polynomial) -> Value {
        Value::String(format_poly(self.vars, self.order, f))
    }

    pub fn polys(&self, fs: &[Polynomial]) -> Value {
        Value::Array(fs.iter().map(|f| self.poly(f)).collect())
    }

    pub fn monomial(&self, m: &Monomial) -> Value {
        Value::String(format_monomial(self.vars, m))
    }

    /// Monomials ascending under the problem order.
    pub fn monomials<'m>(&self, ms: impl IntoIterator<Item = &'m Monomial>) -> Value {
        let mut ms: Vec<&Monomial> = ms.into_iter().collect();
        ms.sort_by(|a, b| self.order.compare(a, b));
        Value::Array(ms.into_iter().map(|m| self.monomial(m)).collect())
    }

    pub fn term(&self, t: &Term) -> Value {
        Value::String(format_term(self.vars, t))
    }

    pub fn terms(&self, ts: &[Term]) -> Value {
        let mut ts = ts.to_vec();
        ts.sort_by(|a, b| self.order.compare(&a.monomial, &b.monomial));
        Value::Array(ts.iter().map(|t| self.term(t)).collect())
    }

    pub fn order_label(&self, ord: &MonomialOrder) -> Value {
        let names: Vec<&str> = ord.priority().iter().map(|&i| self.vars[i].as_str()).collect();
        Value::String(format!("{} {}", ord.kind().name(), names.join(" > ")))
    }

    /// `[{monomial, generator}]`, ascending under the problem order.
    pub fn ideals<'m>(&self, entries: impl IntoIterator<Item = (&'m Monomial, &'m CoefIdeal)>) -> Value {
        let mut entries: Vec<_> = entries.into_iter().collect();
        entries.sort_by(|a, b| self.order.compare(a.0, b.0));
        Value::Array(
            entries
                .into_iter()
                .map(|(m, i)| json!({"monomial": self.monomial(m), "generator": int(i.generator())}))
                .collect(),
        )
    }
}

/// A JSON number when it fits in `i64`, else a decimal string.
pub fn int(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(n.to_string()),
    }
}
