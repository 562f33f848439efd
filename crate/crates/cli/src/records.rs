//! Serialisable records emitted by the subcommands. Every number is a decimal
//! string so that JSON readers limited to 64-bit integers never lose digits.

use serde::{Deserialize, Serialize};

use cubesum_core::diophantine::{canonical_form, in_pagliani_family, xyz_to_mkl};
use cubesum_core::{KodairaFiber, SolutionMKL, SolutionXYZ};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub x: String,
    pub y: String,
    pub z: String,
    pub m: Option<String>,
    pub k: Option<String>,
    pub l: Option<String>,
    pub pagliani_u: Option<String>,
}

impl SolutionRecord {
    pub fn new(s: &SolutionXYZ) -> Self {
        let mkl = xyz_to_mkl(s).ok();
        SolutionRecord {
            x: s.x.to_string(),
            y: s.y.to_string(),
            z: s.z.to_string(),
            m: mkl.as_ref().map(|v| v.m.to_string()),
            k: mkl.as_ref().map(|v| v.k.to_string()),
            l: mkl.as_ref().map(|v| v.l.to_string()),
            pagliani_u: in_pagliani_family(s).map(|u| u.to_string()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MapRecord {
    pub m: Option<String>,
    pub k: Option<String>,
    pub l: Option<String>,
    pub x: String,
    pub y: String,
    pub z: String,
    pub canonical: [String; 3],
    pub satisfies: bool,
}

impl MapRecord {
    pub fn new(mkl: Option<&SolutionMKL>, xyz: &SolutionXYZ) -> Self {
        let c = canonical_form(xyz);
        MapRecord {
            m: mkl.map(|v| v.m.to_string()),
            k: mkl.map(|v| v.k.to_string()),
            l: mkl.map(|v| v.l.to_string()),
            x: xyz.x.to_string(),
            y: xyz.y.to_string(),
            z: xyz.z.to_string(),
            canonical: [c.x.to_string(), c.y.to_string(), c.z.to_string()],
            satisfies: xyz.is_valid(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PaglianiRecord {
    pub u: String,
    pub m: String,
    pub k: String,
    pub l: String,
    pub canonical: [String; 3],
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PaglianiIdentityRecord {
    pub m: String,
    pub k: String,
    pub l: String,
    pub identity_holds: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FiberRecord {
    pub place: String,
    pub fiber_type: String,
    pub euler: String,
    pub m_t: String,
    pub m_simple: String,
    pub component_group: String,
    pub v_a: String,
    pub v_b: String,
    pub v_delta: String,
}

impl FiberRecord {
    pub fn new(f: &KodairaFiber) -> Self {
        let opt = |v: Option<u32>| v.map_or("inf".to_string(), |v| v.to_string());
        FiberRecord {
            place: f.place.to_string(),
            fiber_type: f.fiber_type.to_string(),
            euler: f.euler.to_string(),
            m_t: f.m_t.to_string(),
            m_simple: f.m_simple.to_string(),
            component_group: f.component_group.to_string(),
            v_a: opt(f.v_a),
            v_b: opt(f.v_b),
            v_delta: f.v_delta.to_string(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HeightsRecord {
    pub sections: Vec<String>,
    pub convention: String,
    pub gram: Vec<Vec<String>>,
    pub det: String,
    pub mw_rank: String,
    pub shioda_tate_rank: String,
    pub torsion_order: String,
    pub det_ns: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SectionRecord {
    pub section: String,
    pub curve: String,
    pub x: String,
    pub y: String,
    pub height: Option<String>,
    pub xyz: Option<[String; 3]>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CoefficientRecord {
    pub n: String,
    pub a_n: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EtaRecord {
    pub spec: String,
    pub precision: String,
    pub order: String,
    pub terms: Vec<CoefficientRecord>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ApRecord {
    pub p: String,
    pub closed_form: String,
    pub via_characters: Option<String>,
    pub hecke: String,
    pub pi_plus: Option<String>,
    pub pi_minus: Option<String>,
    pub agree: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CountRecord {
    pub p: String,
    pub n: String,
    pub brute: String,
    pub formula: String,
    pub a_term_used: String,
    pub convention: String,
    #[serde(rename = "match")]
    pub matches: bool,
    pub trace_alg: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CacheRecord {
    pub version: String,
    pub convention: String,
    pub max: String,
    pub coefficients: Vec<CoefficientRecord>,
}
