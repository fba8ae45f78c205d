use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
}

impl OrderKind {
    pub const ALL: [OrderKind; 3] = [OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex];

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }

    pub fn parse(s: &str) -> Option<OrderKind> {
        match s.to_ascii_lowercase().as_str() {
            "lex" => Some(OrderKind::Lex),
            "deglex" | "grlex" => Some(OrderKind::DegLex),
            "degrevlex" | "grevlex" => Some(OrderKind::DegRevLex),
            _ => None,
        }
    }
}

/// A monomial order: a kind plus a variable priority, most significant first.
///
/// `lex` with priority `[y, x]` is the order with `x ≺ y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &p in &priority {
            if p >= priority.len() || seen[p] {
                return Err(Error::Precondition(format!(
                    "variable priority {priority:?} is not a permutation"
                )));
            }
            seen[p] = true;
        }
        Ok(MonomialOrder { kind, priority })
    }

    /// Variables in their natural order, `x_1` most significant.
    pub fn natural(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            priority: (0..nvars).collect(),
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn arity(&self) -> usize {
        self.priority.len()
    }

    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.arity() != self.arity() {
                return Err(Error::ArityMismatch {
                    expected: self.arity(),
                    found: m.arity(),
                });
            }
        }
        Ok(self.compare(a, b))
    }

    /// Panics on arity mismatch; see [`try_compare`](Self::try_compare).
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.arity(), self.arity(), "monomial arity mismatch");
        assert_eq!(b.arity(), self.arity(), "monomial arity mismatch");
        let (ea, eb) = (a.exponents(), b.exponents());
        let lex = || {
            self.priority
                .iter()
                .map(|&i| ea[i].cmp(&eb[i]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        };
        match self.kind {
            OrderKind::Lex => lex(),
            OrderKind::DegLex => a.degree().cmp(&b.degree()).then_with(lex),
            OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                self.priority
                    .iter()
                    .rev()
                    .map(|&i| eb[i].cmp(&ea[i]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }),
        }
    }

    /// Every order of every kind over every variable permutation.
    pub fn all_for(nvars: usize) -> Vec<MonomialOrder> {
        let perms = permutations(nvars);
        let mut out = Vec::with_capacity(perms.len() * 3);
        for kind in OrderKind::ALL {
            for p in &perms {
                out.push(MonomialOrder {
                    kind,
                    priority: p.clone(),
                });
            }
        }
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}
