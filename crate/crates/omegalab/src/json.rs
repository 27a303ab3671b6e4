//! JSON renderings with exact strings for every scalar.

use serde_json::{json, Value};

use crate::algebra::AlgebraElement;
use crate::pair::PairAlgebraElement;
use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::scalar::RadicalRational;
use crate::tableau::{Partition, StandardTableau};

pub fn partition_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&v| json!(v)).collect())
}

pub fn permutation_json(p: &Permutation) -> Value {
    Value::Array(p.one_line().iter().map(|&v| json!(v)).collect())
}

pub fn tableau_json(t: &StandardTableau) -> Value {
    Value::Array(
        t.columns()
            .iter()
            .map(|col| Value::Array(col.iter().map(|&v| json!(v)).collect()))
            .collect(),
    )
}

/// `[{"radicand": m, "coeff": "a/b"}, ...]` with ascending radicands.
pub fn scalar_json(c: &RadicalRational) -> Value {
    Value::Array(
        c.iter()
            .map(|(m, q)| json!({"radicand": m, "coeff": q.to_string()}))
            .collect(),
    )
}

pub fn polynomial_json(p: &Polynomial) -> Value {
    json!({
        "family": p.family().to_string(),
        "n": p.nvars(),
        "terms": p
            .terms()
            .map(|(m, c)| json!({"exponents": m.0, "coeff": scalar_json(c)}))
            .collect::<Vec<_>>(),
    })
}

pub fn element_json(e: &AlgebraElement) -> Value {
    json!({
        "n": e.n(),
        "terms": e
            .terms()
            .map(|(sigma, p)| json!({"perm": permutation_json(sigma), "coeff": polynomial_json(p)}))
            .collect::<Vec<_>>(),
    })
}

pub fn pair_element_json(e: &PairAlgebraElement) -> Value {
    json!({
        "n": e.n(),
        "terms": e
            .terms()
            .map(|((s, t), c)| {
                json!({
                    "perm1": permutation_json(s),
                    "perm2": permutation_json(t),
                    "coeff": scalar_json(c),
                })
            })
            .collect::<Vec<_>>(),
    })
}
