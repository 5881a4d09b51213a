//! Transcribed figure data. Built in at compile time; `HILBFAN_GOLDEN` points at a directory
//! with the same layout to override it.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::json::{DiagramJson, SCHEMA_VERSION};

pub const ENV_VAR: &str = "HILBFAN_GOLDEN";

const FIGURE1: &str = include_str!("../../golden/figure1.json");
const FIGURE2: [&str; 6] = [
    include_str!("../../golden/figure2/n1.json"),
    include_str!("../../golden/figure2/n2.json"),
    include_str!("../../golden/figure2/n3.json"),
    include_str!("../../golden/figure2/n4.json"),
    include_str!("../../golden/figure2/n5.json"),
    include_str!("../../golden/figure2/n6.json"),
];

/// The transcribed 18×18 matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub schema_version: u32,
    #[serde(default)]
    pub description: Option<String>,
    pub m: u32,
    #[serde(default)]
    pub column_blocks: Vec<usize>,
    pub rows: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Golden {
    Builtin,
    Dir(PathBuf),
}

fn check_version(v: u32, what: &str) -> Result<()> {
    if v != SCHEMA_VERSION {
        return Err(Error::Domain(format!("{what}: unknown schema version {v}")));
    }
    Ok(())
}

impl Golden {
    pub fn builtin() -> Self {
        Golden::Builtin
    }

    pub fn from_env() -> Self {
        match std::env::var_os(ENV_VAR) {
            Some(d) if !d.is_empty() => Golden::Dir(PathBuf::from(d)),
            _ => Golden::Builtin,
        }
    }

    fn read(&self, rel: &str, builtin: Option<&'static str>) -> Result<Option<String>> {
        match self {
            Golden::Builtin => Ok(builtin.map(str::to_owned)),
            Golden::Dir(d) => {
                let p = d.join(rel);
                if !p.exists() {
                    return Ok(None);
                }
                Ok(Some(std::fs::read_to_string(p)?))
            }
        }
    }

    pub fn figure1(&self) -> Result<MatrixJson> {
        let text = self
            .read("figure1.json", Some(FIGURE1))?
            .ok_or_else(|| Error::Domain("golden figure1.json is missing".into()))?;
        let m: MatrixJson = serde_json::from_str(&text)?;
        check_version(m.schema_version, "figure1.json")?;
        if m.rows.iter().any(|r| r.len() != m.rows.len()) {
            return Err(Error::Domain("figure1.json: matrix is not square".into()));
        }
        Ok(m)
    }

    /// The diagram for `n`, or `None` when no transcription exists.
    pub fn figure2(&self, n: u32) -> Result<Option<DiagramJson>> {
        let builtin = (1..=6).contains(&n).then(|| FIGURE2[n as usize - 1]);
        let Some(text) = self.read(&format!("figure2/n{n}.json"), builtin)? else {
            return Ok(None);
        };
        let d: DiagramJson = serde_json::from_str(&text)?;
        check_version(d.schema_version, "figure2")?;
        if d.n.is_some_and(|m| m != n) {
            return Err(Error::Domain(format!("figure2/n{n}.json is labelled n = {:?}", d.n)));
        }
        Ok(Some(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_files_parse() {
        let g = Golden::builtin();
        let m = g.figure1().unwrap();
        assert_eq!(m.rows.len(), 18);
        assert_eq!(m.column_blocks.iter().sum::<usize>(), 18);
        for n in 1..=6 {
            let d = g.figure2(n).unwrap().unwrap();
            let e = d.entries();
            assert_eq!(e.last(), Some(&crate::fan::DiagramEntry::Ray((1, 2))), "n = {n}");
        }
        assert!(g.figure2(7).unwrap().is_none());
    }

    #[test]
    fn directory_override() {
        let dir = std::env::temp_dir().join(format!("hilbfan-golden-{}", std::process::id()));
        std::fs::create_dir_all(dir.join("figure2")).unwrap();
        std::fs::write(dir.join("figure2/n1.json"), r#"{"schema_version":1,"entries":[{"ray":[1,2]}]}"#).unwrap();
        let g = Golden::Dir(dir.clone());
        assert_eq!(g.figure2(1).unwrap().unwrap().entries().len(), 1);
        assert!(g.figure2(2).unwrap().is_none());
        assert!(g.figure1().is_err());
        std::fs::write(dir.join("figure2/n3.json"), r#"{"schema_version":9,"entries":[]}"#).unwrap();
        assert!(g.figure2(3).is_err());
        std::fs::remove_dir_all(dir).unwrap();
    }
}
