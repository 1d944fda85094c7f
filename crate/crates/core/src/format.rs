//! JSON file formats for R-matrices, Hopf algebras and comodules.
//!
//! Scalars are always serialized as `"num/den"` strings, never as floats;
//! sparse entry lists are sorted and zero entries dropped, so
//! parse-then-serialize is the identity on canonical files.

use crate::hecke::{HeckeError, HeckeSymmetry};
use crate::hopf::{Comodule, HopfAlgebra, HopfError};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("index {index} out of range: {what} must be < {bound}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },
    #[error("{0}")]
    BadShape(String),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// An R-matrix file: sparse entries `[out_pair, in_pair, "num/den"]` with the
/// flat pair index `(i, j) -> i * dim + j`; omitted entries are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMatrixFile {
    pub dim: usize,
    pub q: Scalar,
    #[serde(default)]
    pub entries: Vec<(usize, usize, Scalar)>,
}

impl RMatrixFile {
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let file: RMatrixFile = serde_json::from_str(text)?;
        let bound = file.dim * file.dim;
        for &(out, inp, _) in &file.entries {
            for (what, index) in [("out_pair_index", out), ("in_pair_index", inp)] {
                if index >= bound {
                    return Err(FormatError::IndexOutOfRange { what, index, bound });
                }
            }
        }
        Ok(file)
    }

    pub fn to_hecke(&self) -> Result<HeckeSymmetry, FormatError> {
        let bound = self.dim * self.dim;
        let mut r = Matrix::zeros(bound, bound);
        for (out, inp, c) in &self.entries {
            let updated = r.at(*out, *inp) + c;
            r.set(*out, *inp, updated);
        }
        Ok(HeckeSymmetry::new(self.dim, self.q.clone(), r)?)
    }

    pub fn from_hecke(h: &HeckeSymmetry) -> Self {
        let bound = h.dim() * h.dim();
        let mut entries = Vec::new();
        for out in 0..bound {
            for inp in 0..bound {
                let c = h.r_matrix().at(out, inp);
                if !c.is_zero() {
                    entries.push((out, inp, c.clone()));
                }
            }
        }
        RMatrixFile {
            dim: h.dim(),
            q: h.q().clone(),
            entries,
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut canonical = self.clone();
        canonical.entries.sort();
        canonical.entries.retain(|(_, _, c)| !c.is_zero());
        serde_json::to_string_pretty(&canonical).expect("serialization cannot fail")
    }
}

/// A Hopf algebra file. `mult` holds quadruples `[i, j, k, c]` meaning the
/// `e_k` coefficient of `e_i e_j`; `comult` holds `[i, j, k, c]` meaning the
/// `e_j (x) e_k` coefficient of `Delta(e_i)`. The optional `unit` defaults to
/// the first basis element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfFile {
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Scalar>>,
    pub mult: Vec<(usize, usize, usize, Scalar)>,
    pub comult: Vec<(usize, usize, usize, Scalar)>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Vec<Scalar>>,
}

impl HopfFile {
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let file: HopfFile = serde_json::from_str(text)?;
        let n = file.basis.len();
        if n == 0 {
            return Err(FormatError::BadShape("empty basis".into()));
        }
        for &(i, j, k, _) in file.mult.iter().chain(&file.comult) {
            for (what, index) in [("first index", i), ("second index", j), ("third index", k)] {
                if index >= n {
                    return Err(FormatError::IndexOutOfRange {
                        what,
                        index,
                        bound: n,
                    });
                }
            }
        }
        if file.counit.len() != n {
            return Err(FormatError::BadShape(format!(
                "counit must have length {n}, found {}",
                file.counit.len()
            )));
        }
        if let Some(unit) = &file.unit {
            if unit.len() != n {
                return Err(FormatError::BadShape(format!(
                    "unit must have length {n}, found {}",
                    unit.len()
                )));
            }
        }
        if file.antipode.len() != n || file.antipode.iter().any(|row| row.len() != n) {
            return Err(FormatError::BadShape(format!("antipode must be {n}x{n}")));
        }
        Ok(file)
    }

    pub fn to_hopf(&self) -> Result<HopfAlgebra, FormatError> {
        let n = self.basis.len();
        let mut mult = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for (i, j, k, c) in &self.mult {
            mult[*i][*j][*k] += c;
        }
        let unit = self.unit.clone().unwrap_or_else(|| {
            let mut u = vec![Scalar::zero(); n];
            u[0] = Scalar::one();
            u
        });
        let mut comult: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
        for (i, j, k, c) in &self.comult {
            comult[*i].push((*j, *k, c.clone()));
        }
        let antipode = Matrix::from_fn(n, n, |i, j| self.antipode[i][j].clone());
        Ok(HopfAlgebra::new(
            self.basis.clone(),
            mult,
            unit,
            comult,
            self.counit.clone(),
            antipode,
        )?)
    }

    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        let n = h.dim();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in h.mult_table()[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        mult.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        let mut comult = Vec::new();
        for i in 0..n {
            let t = h.comult_matrix(&h.basis_element(i));
            for j in 0..n {
                for k in 0..n {
                    if !t.at(j, k).is_zero() {
                        comult.push((i, j, k, t.at(j, k).clone()));
                    }
                }
            }
        }
        let antipode = (0..n)
            .map(|i| (0..n).map(|j| h.antipode_matrix().at(i, j).clone()).collect())
            .collect();
        HopfFile {
            basis: h.basis_names().to_vec(),
            unit: Some(h.unit_vector().to_vec()),
            mult,
            comult,
            counit: h.counit_vector().to_vec(),
            antipode,
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut canonical = self.clone();
        canonical.mult.sort();
        canonical.mult.retain(|(_, _, _, c)| !c.is_zero());
        canonical.comult.sort();
        canonical.comult.retain(|(_, _, _, c)| !c.is_zero());
        serde_json::to_string_pretty(&canonical).expect("serialization cannot fail")
    }
}

/// A comodule file: `coaction[i]` lists triples `[v_out, h_index, c]` with
/// `rho(v_i) = sum c v_out (x) e_h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComoduleFile {
    pub dim: usize,
    pub coaction: Vec<Vec<(usize, usize, Scalar)>>,
}

impl ComoduleFile {
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let file: ComoduleFile = serde_json::from_str(text)?;
        if file.coaction.len() != file.dim {
            return Err(FormatError::BadShape(format!(
                "coaction must list {} vectors, found {}",
                file.dim,
                file.coaction.len()
            )));
        }
        for triples in &file.coaction {
            for &(j, _, _) in triples {
                if j >= file.dim {
                    return Err(FormatError::IndexOutOfRange {
                        what: "v_out",
                        index: j,
                        bound: file.dim,
                    });
                }
            }
        }
        Ok(file)
    }

    pub fn to_comodule(&self) -> Result<Comodule, FormatError> {
        Ok(Comodule::new(self.dim, self.coaction.clone())?)
    }

    pub fn from_comodule(m: &Comodule) -> Self {
        let coaction = (0..m.dim())
            .map(|i| {
                let mut triples = m.coaction_triples(i).to_vec();
                triples.sort_by_key(|t| (t.0, t.1));
                triples
            })
            .collect();
        ComoduleFile {
            dim: m.dim(),
            coaction,
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut canonical = self.clone();
        for triples in canonical.coaction.iter_mut() {
            triples.sort_by_key(|t| (t.0, t.1));
            triples.retain(|(_, _, c)| !c.is_zero());
        }
        serde_json::to_string_pretty(&canonical).expect("serialization cannot fail")
    }
}
