//! Problem fixtures shared by the benchmarks.

use tb_core::{BorderPrebasis, Polynomial, Problem};

pub const WORKED: &str = r#"{
    "vars": ["x", "y"],
    "order": {"kind": "deglex", "priority": ["x", "y"]},
    "ideal_generators": ["x^3-x", "y^3-y", "xy^2-xy", "x^2y^2-x^2y", "x^3y-xy", "2x^2y-y^2-y", "2x^2+2xy-y^2-2x-y"],
    "mapping": [
        {"monomial": "1", "generators": [0]},
        {"monomial": "x", "generators": [0]},
        {"monomial": "y", "generators": [0]},
        {"monomial": "xy", "generators": [0]},
        {"monomial": "y^2", "generators": [0]},
        {"monomial": "x^2", "generators": [2]},
        {"monomial": "x^2y", "generators": [2]}
    ],
    "prebasis": ["x^3-x", "y^3-y", "xy^2-xy", "x^2y^2-x^2y", "x^3y-xy", "2x^2y-y^2-y", "2x^2+2xy-y^2-2x-y"],
    "query_polys": ["x^4+2x^3y^2+x^2+4xy+15"]
}"#;

pub fn worked() -> Problem {
    Problem::from_json(WORKED).expect("fixture parses")
}

pub fn worked_prebasis() -> BorderPrebasis {
    let p = worked();
    BorderPrebasis::from_polynomials(p.order_ideal.clone().unwrap(), p.prebasis.as_deref().unwrap())
        .expect("fixture is a prebasis")
}

/// `⟨m·xy, x^d − x, y^d − z, z² − m·z⟩`, a finitely generated quotient
/// with `m`-torsion whose size grows with `d`.
pub fn torsion_family(d: u32, m: i64) -> Problem {
    let text = format!(
        r#"{{"vars": ["x", "y", "z"], "ideal_generators": ["{m}xy", "x^{d}-x", "y^{d}-z", "z^2-{m}z"]}}"#
    );
    Problem::from_json(&text).expect("family parses")
}

/// `(x + y + 1)^k` in the variables of `p`.
pub fn dense_query(p: &Problem, k: u32) -> Polynomial {
    let n = p.vars.len();
    let mut base = Polynomial::one(n);
    for i in 0..n.min(2) {
        base = &base + &Polynomial::var(n, i);
    }
    let mut out = Polynomial::one(n);
    for _ in 0..k {
        out = &out * &base;
    }
    out
}
