//! Self-contained JSON certificates: a graph, a claimed value and a witness
//! that can be re-checked from the graph6 string alone.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::constructors::Trace;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{chromatic_number, InvariantKind, InvariantResult, Witness};
use crate::models::{verify_model, MinorModel, ModelClass};

pub const CERTIFICATE_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    Invariant(InvariantKind),
    /// Small model with at least `χ` branch sets.
    SmallModel,
    /// Semi-small model with at least `χ` branch sets.
    SemismallModel,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateKind::Invariant(k) => k.fmt(f),
            CertificateKind::SmallModel => f.write_str("small_model"),
            CertificateKind::SemismallModel => f.write_str("semismall_model"),
        }
    }
}

impl FromStr for CertificateKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small_model" => Ok(CertificateKind::SmallModel),
            "semismall_model" => Ok(CertificateKind::SemismallModel),
            other => other.parse().map(CertificateKind::Invariant),
        }
    }
}

impl Serialize for CertificateKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CertificateKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub graph6: String,
    pub kind: CertificateKind,
    pub value: usize,
    pub witness: Witness,
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Trace>,
}

impl Certificate {
    pub fn for_invariant(g: &Graph, result: InvariantResult) -> Result<Certificate> {
        let mut cert = Certificate {
            schema_version: CERTIFICATE_SCHEMA_VERSION,
            graph6: g.to_graph6(),
            kind: CertificateKind::Invariant(result.kind),
            value: result.value,
            witness: result.witness,
            verified: false,
            trace: None,
        };
        cert.verified = cert.check_against(g)?;
        Ok(cert)
    }

    /// `kind` must be one of the model kinds.
    pub fn for_model(g: &Graph, kind: CertificateKind, model: MinorModel, trace: Trace) -> Result<Certificate> {
        if matches!(kind, CertificateKind::Invariant(_)) {
            return Err(Error::PreconditionViolated(format!("{kind} is not a model certificate kind")));
        }
        let mut cert = Certificate {
            schema_version: CERTIFICATE_SCHEMA_VERSION,
            graph6: g.to_graph6(),
            kind,
            value: model.len(),
            witness: Witness::Model(model),
            verified: false,
            trace: Some(trace),
        };
        cert.verified = cert.check_against(g)?;
        Ok(cert)
    }

    /// Re-derives the verdict from `graph6` and the witness only, ignoring
    /// the stored `verified` flag.
    pub fn recheck(&self) -> Result<bool> {
        if self.schema_version != CERTIFICATE_SCHEMA_VERSION {
            return Ok(false);
        }
        let g = Graph::from_graph6(&self.graph6)?;
        self.check_against(&g)
    }

    fn check_against(&self, g: &Graph) -> Result<bool> {
        match self.kind {
            CertificateKind::Invariant(kind) => Ok(InvariantResult {
                kind,
                value: self.value,
                witness: self.witness.clone(),
            }
            .verify(g)),
            CertificateKind::SmallModel | CertificateKind::SemismallModel => {
                let Witness::Model(m) = &self.witness else {
                    return Ok(false);
                };
                let bound = if self.kind == CertificateKind::SmallModel {
                    ModelClass::Small
                } else {
                    ModelClass::SemiSmall
                };
                let report = verify_model(g, m);
                Ok(report.valid
                    && report.classification.at_most(bound)
                    && m.len() == self.value
                    && self.value >= chromatic_number(g)?.value)
            }
        }
    }
}
