//! Versioned JSON forms of fans and boundary diagrams. Ideals appear as step sequences.

use serde::{Deserialize, Serialize};

use super::{BoundaryDiagram, Cone, DiagramEntry, Fan2D, Point};
use crate::error::{Error, Result};
use crate::kernel::Characteristic;
use crate::staircase::{Staircase, StepSeq};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanJson {
    pub schema_version: u32,
    pub family: String,
    pub char: u64,
    pub source: Vec<StepSeq>,
    pub rays: Vec<[i64; 2]>,
    pub cones: Vec<ConeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeJson {
    pub ray_ccw: Option<[i64; 2]>,
    pub ray_cw: Option<[i64; 2]>,
    pub ideal: Vec<StepSeq>,
    pub vertex: [i64; 2],
}

fn pair(p: Point) -> [i64; 2] {
    [p.0, p.1]
}

fn unpair(p: [i64; 2]) -> Point {
    (p[0], p[1])
}

fn to_steps(v: &[Staircase]) -> Vec<StepSeq> {
    v.iter().map(Staircase::to_steps).collect()
}

fn from_steps(v: &[StepSeq]) -> Vec<Staircase> {
    v.iter().map(Staircase::from_steps).collect()
}

impl From<&Fan2D> for FanJson {
    fn from(f: &Fan2D) -> Self {
        FanJson {
            schema_version: SCHEMA_VERSION,
            family: f.family.to_string(),
            char: if f.ch.is_zero() { 0 } else { f.ch.get() },
            source: to_steps(&f.sources),
            rays: f.rays.iter().copied().map(pair).collect(),
            cones: f
                .cones
                .iter()
                .map(|c| ConeJson {
                    ray_ccw: c.ray_ccw.map(pair),
                    ray_cw: c.ray_cw.map(pair),
                    ideal: to_steps(&c.ideals),
                    vertex: pair(c.vertex),
                })
                .collect(),
        }
    }
}

impl TryFrom<FanJson> for Fan2D {
    type Error = Error;

    fn try_from(j: FanJson) -> Result<Self> {
        if j.schema_version != SCHEMA_VERSION {
            return Err(Error::Domain(format!("unknown fan schema version {}", j.schema_version)));
        }
        if j.cones.len() != j.rays.len().max(1) {
            return Err(Error::Domain("fan needs one cone per ray".into()));
        }
        Ok(Fan2D {
            family: j.family.parse()?,
            ch: Characteristic::new(j.char)?,
            sources: from_steps(&j.source),
            rays: j.rays.into_iter().map(unpair).collect(),
            cones: j
                .cones
                .into_iter()
                .map(|c| Cone {
                    ray_cw: c.ray_cw.map(unpair),
                    ray_ccw: c.ray_ccw.map(unpair),
                    vertex: unpair(c.vertex),
                    ideals: from_steps(&c.ideal),
                })
                .collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryJson {
    Ray([i64; 2]),
    Ideal(StepSeq),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AboveJson {
    pub ideal: StepSeq,
    pub shown: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub entries: Vec<EntryJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub above: Option<AboveJson>,
}

impl From<&BoundaryDiagram> for DiagramJson {
    fn from(d: &BoundaryDiagram) -> Self {
        DiagramJson {
            schema_version: SCHEMA_VERSION,
            description: None,
            n: None,
            entries: d
                .entries
                .iter()
                .map(|e| match e {
                    DiagramEntry::Ray(r) => EntryJson::Ray(pair(*r)),
                    DiagramEntry::Ideal(s) => EntryJson::Ideal(s.to_steps()),
                })
                .collect(),
            above: d.above.as_ref().map(|s| AboveJson { ideal: s.to_steps(), shown: false }),
        }
    }
}

impl DiagramJson {
    /// Only the drawn entries, as a diagram without the hidden cone.
    pub fn entries(&self) -> Vec<DiagramEntry> {
        self.entries
            .iter()
            .map(|e| match e {
                EntryJson::Ray(r) => DiagramEntry::Ray(unpair(*r)),
                EntryJson::Ideal(s) => DiagramEntry::Ideal(Staircase::from_steps(s)),
            })
            .collect()
    }
}

/// Compact text form: `[1,2 | (1,2)]`.
pub fn diagram_text(entries: &[DiagramEntry]) -> String {
    let parts: Vec<String> = entries
        .iter()
        .map(|e| match e {
            DiagramEntry::Ray(r) => format!("({},{})", r.0, r.1),
            DiagramEntry::Ideal(s) => {
                let st = s.to_steps();
                st.0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            }
        })
        .collect();
    format!("[{}]", parts.join(" | "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{boundary_diagram, standard_fan};

    #[test]
    fn fan_round_trip() {
        let i = Staircase::from_steps(&StepSeq(vec![4])).pow(2);
        let f = standard_fan(&[i], None, Characteristic::ZERO).unwrap();
        let j = FanJson::from(&f);
        let text = serde_json::to_string(&j).unwrap();
        let back: FanJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Fan2D::try_from(back).unwrap(), f);
    }

    #[test]
    fn diagram_round_trip_and_text() {
        let i = Staircase::from_steps(&StepSeq(vec![4]));
        let f = standard_fan(&[i], None, Characteristic::ZERO).unwrap();
        let d = boundary_diagram(&f).unwrap();
        let j = DiagramJson::from(&d);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, r#"{"schema_version":1,"entries":[{"ideal":[1,2]},{"ray":[1,2]}]}"#);
        let back: DiagramJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.entries(), d.entries);
        assert_eq!(diagram_text(&d.entries), "[1,2 | (1,2)]");
    }
}
