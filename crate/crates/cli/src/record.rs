//! Machine-readable output records. The schema lives in
//! `schema/output_record.schema.json`; big integers and rationals are
//! carried as exact decimal strings.

use std::fmt;

use difftangent::functor::{Dimension, TangentReport, Witness};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const SCHEMA: &str = include_str!("../schema/output_record.schema.json");

/// A nonnegative integer or the string `"undetermined"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimensionField {
    Value(usize),
    Undetermined,
}

impl From<Dimension> for DimensionField {
    fn from(d: Dimension) -> Self {
        match d {
            Dimension::Determined(k) => DimensionField::Value(k),
            Dimension::Undetermined => DimensionField::Undetermined,
        }
    }
}

impl Serialize for DimensionField {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            DimensionField::Value(k) => s.serialize_u64(*k as u64),
            DimensionField::Undetermined => s.serialize_str("undetermined"),
        }
    }
}

impl<'de> Deserialize<'de> for DimensionField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = DimensionField;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a nonnegative integer or \"undetermined\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
                Ok(DimensionField::Value(v as usize))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
                if v == "undetermined" {
                    Ok(DimensionField::Undetermined)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WitnessRecord {
    /// `x = (a + b·y)/(c + d·y)`.
    Mobius {
        a: String,
        b: String,
        c: String,
        d: String,
        det: String,
    },
    /// Polynomial lift with `‖F(x)‖² = Ψ(‖x‖²)` and the value `D_m(q_n ∘ f)`.
    Lift {
        lift: String,
        psi: String,
        pushforward: String,
    },
}

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::Mobius(m) => WitnessRecord::Mobius {
                a: m.a().to_string(),
                b: m.b().to_string(),
                c: m.c().to_string(),
                d: m.d().to_string(),
                det: m.det().to_string(),
            },
            Witness::Lift(l) => WitnessRecord::Lift {
                lift: l.lift.to_string(),
                psi: l.psi.to_string(),
                pushforward: l.pushforward.to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub space: String,
    pub functor: String,
    pub test: Option<String>,
    pub dimension: DimensionField,
    pub generators: Vec<String>,
    pub witness: Option<WitnessRecord>,
    pub status: String,
    pub justification: String,
    pub version: String,
    pub input: Vec<String>,
}

impl OutputRecord {
    pub fn new(report: &TangentReport, input: &[String]) -> Self {
        OutputRecord {
            space: report.space.to_string(),
            functor: report.functor.name().to_string(),
            test: report.functor.test_space().map(ToString::to_string),
            dimension: report.dimension.into(),
            generators: report.generators.clone(),
            witness: report.witness.as_ref().map(WitnessRecord::from),
            status: report.status.as_str().to_string(),
            justification: report.justification.clone(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            input: input.to_vec(),
        }
    }
}
