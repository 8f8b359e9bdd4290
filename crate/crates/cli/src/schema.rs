//! JSON schemas for the input documents.

use serde_json::{json, Value};

pub const NAMES: [&str; 11] = [
    "polynomial",
    "rank-function",
    "support",
    "subspace-family",
    "permutation",
    "diagram",
    "monomial-ideal",
    "simplicial-complex",
    "polytope",
    "polytope-list",
    "mixed-volume-table",
];

fn nat() -> Value {
    json!({ "type": "integer", "minimum": 0 })
}

fn nat_vec() -> Value {
    json!({ "type": "array", "items": nat() })
}

fn rational() -> Value {
    json!({
        "oneOf": [
            { "type": "integer" },
            { "type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$" }
        ]
    })
}

fn object(title: &str, props: Value, required: &[&str]) -> Value {
    json!({
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": title,
        "type": "object",
        "properties": props,
        "required": required,
        "additionalProperties": false,
    })
}

fn polytope() -> Value {
    object(
        "Polytope",
        json!({ "d": nat(), "vertices": { "type": "array", "minItems": 1, "items": { "type": "array", "items": rational() } } }),
        &["d", "vertices"],
    )
}

pub fn schema(name: &str) -> Option<Value> {
    Some(match name {
        "polynomial" => object(
            "IntPolynomial",
            json!({
                "nvars": nat(),
                "terms": { "type": "array", "items": {
                    "type": "object",
                    "properties": { "exp": nat_vec(), "coef": { "type": "string", "pattern": "^-?[0-9]+$" } },
                    "required": ["exp", "coef"]
                }}
            }),
            &["nvars", "terms"],
        ),
        "rank-function" => object(
            "RankFunction",
            json!({ "p": { "type": "integer", "minimum": 0, "maximum": 20 }, "values": nat_vec() }),
            &["p", "values"],
        ),
        "support" => object(
            "Support",
            json!({ "p": nat(), "points": { "type": "array", "items": nat_vec() } }),
            &["p", "points"],
        ),
        "subspace-family" => object(
            "SubspaceFamily",
            json!({
                "ambient": nat(),
                "field": { "type": "string", "pattern": "^(Q|Fp:[0-9]+)$", "default": "Q" },
                "subspaces": { "type": "array", "items": { "type": "array", "items": { "type": "array", "items": rational() } } }
            }),
            &["ambient", "subspaces"],
        ),
        "permutation" => object(
            "Permutation",
            json!({ "p": nat(), "one_line": { "type": "array", "items": { "type": "integer", "minimum": 1 } } }),
            &["p", "one_line"],
        ),
        "diagram" => object(
            "Diagram",
            json!({
                "p": nat(),
                "cells": { "type": "array", "items": { "type": "array", "items": { "type": "integer", "minimum": 1 }, "minItems": 2, "maxItems": 2 } }
            }),
            &["p", "cells"],
        ),
        "monomial-ideal" => object(
            "MonomialIdeal",
            json!({
                "nvars": nat(),
                "p": nat(),
                "degrees": { "type": "array", "items": nat_vec() },
                "generators": { "type": "array", "items": nat_vec() }
            }),
            &["nvars", "p", "degrees", "generators"],
        ),
        "simplicial-complex" => object(
            "SimplicialComplex",
            json!({
                "nverts": { "type": "integer", "minimum": 0, "maximum": 20 },
                "facets": { "type": "array", "items": { "type": "array", "items": { "type": "integer", "minimum": 1 } } }
            }),
            &["nverts", "facets"],
        ),
        "polytope" => polytope(),
        "polytope-list" => {
            let mut one = polytope();
            one.as_object_mut().expect("object").remove("$schema");
            object(
                "PolytopeList",
                json!({ "polytopes": { "type": "array", "minItems": 1, "items": one } }),
                &["polytopes"],
            )
        }
        "mixed-volume-table" => object(
            "MixedVolumeTable",
            json!({
                "d": nat(),
                "p": nat(),
                "entries": { "type": "array", "items": {
                    "type": "object",
                    "properties": { "n": nat_vec(), "v": rational() },
                    "required": ["n", "v"]
                }}
            }),
            &["d", "p", "entries"],
        ),
        _ => return None,
    })
}
