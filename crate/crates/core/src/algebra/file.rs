use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Algebra, AlgebraError, LinMap};
use crate::ring::Scalar;

/// On-disk JSON form. Every entry is a canonical scalar string; `maps` holds
/// named square matrices in row order (`rows[j][i]` is the `e_j`-coordinate of
/// the image of `e_i`).
///
/// ```json
/// {"dim": 2,
///  "structure": [[["1","0"],["0","1"]], [["0","1"],["0","0"]]],
///  "maps": {"mu": [["1","0"],["0","-1"]]}}
/// ```
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub structure: Vec<Vec<Vec<String>>>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Debug, Clone)]
pub struct LoadedAlgebra {
    pub algebra: Algebra,
    pub maps: BTreeMap<String, LinMap>,
}

impl LoadedAlgebra {
    pub fn map(&self, name: &str) -> Option<&LinMap> {
        self.maps.get(name)
    }
}

fn parse_grid(rows: &[Vec<String>]) -> Result<Vec<Vec<Scalar>>, AlgebraError> {
    rows.iter()
        .map(|r| r.iter().map(|s| s.parse::<Scalar>().map_err(AlgebraError::from)).collect())
        .collect()
}

fn format_grid(rows: Vec<Vec<Scalar>>) -> Vec<Vec<String>> {
    rows.into_iter().map(|r| r.into_iter().map(|s| s.to_string()).collect()).collect()
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(text).map_err(|e| AlgebraError::File(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serialises")
    }

    pub fn from_parts(algebra: &Algebra, maps: &BTreeMap<String, LinMap>) -> Self {
        let d = algebra.dim();
        let structure = (0..d)
            .map(|i| (0..d).map(|j| algebra.basis_product(i, j).iter().map(|s| s.to_string()).collect()).collect())
            .collect();
        let maps = maps.iter().map(|(k, m)| (k.clone(), format_grid(m.to_rows()))).collect();
        AlgebraFile { dim: d, structure, maps }
    }

    /// Parses every scalar, validates the algebra and checks map shapes.
    pub fn load(&self) -> Result<LoadedAlgebra, AlgebraError> {
        if self.structure.len() != self.dim {
            return Err(AlgebraError::DimMismatch { expected: self.dim, found: self.structure.len() });
        }
        let structure = self.structure.iter().map(|plane| parse_grid(plane)).collect::<Result<Vec<_>, _>>()?;
        let algebra = Algebra::new(structure)?;
        let mut maps = BTreeMap::new();
        for (name, rows) in &self.maps {
            let m = LinMap::from_rows(parse_grid(rows)?)?;
            if m.rows() != self.dim || m.cols() != self.dim {
                return Err(AlgebraError::DimMismatch { expected: self.dim, found: m.rows().max(m.cols()) });
            }
            maps.insert(name.clone(), m);
        }
        Ok(LoadedAlgebra { algebra, maps })
    }
}

pub fn load_json(text: &str) -> Result<LoadedAlgebra, AlgebraError> {
    AlgebraFile::from_json(text)?.load()
}
