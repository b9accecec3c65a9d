use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Matrix of arrow counts, entry `[i][j]` = number of arrows `i -> j`.
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }
}

/// Linear combination of parallel paths. A path lists arrows as an algebra
/// product: `[g, b]` is `g·b`, which acts on a left module by applying `b`
/// first, so `source(g) == target(b)`.
pub type Relation = Vec<(Scalar, Vec<usize>)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub field: Field,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Vertex indices in ascending order.
    pub order: Vec<usize>,
    pub max_path_length: usize,
}

pub const DEFAULT_MAX_PATH_LENGTH: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldJson {
    Q,
    GF { p: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub field: FieldJson,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<Vec<TermJson>>,
    pub order: Vec<String>,
    #[serde(default = "default_cap")]
    pub max_path_length: usize,
}

fn default_cap() -> usize {
    DEFAULT_MAX_PATH_LENGTH
}

impl FieldJson {
    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldJson::Q => Ok(Field::Rationals),
            FieldJson::GF { p } => Field::prime(*p),
        }
    }

    pub fn from_field(f: Field) -> FieldJson {
        match f {
            Field::Rationals => FieldJson::Q,
            Field::Prime(p) => FieldJson::GF { p },
        }
    }
}

impl Presentation {
    pub fn from_json_str(s: &str) -> Result<Presentation> {
        let j: PresentationJson =
            serde_json::from_str(s).map_err(|e| Error::Input(format!("malformed presentation: {e}")))?;
        Presentation::from_json(&j)
    }

    /// Same as [`Presentation::from_json_str`] but reinterprets all
    /// coefficients over `field`.
    pub fn from_json_str_over(s: &str, field: Field) -> Result<Presentation> {
        let mut j: PresentationJson =
            serde_json::from_str(s).map_err(|e| Error::Input(format!("malformed presentation: {e}")))?;
        j.field = FieldJson::from_field(field);
        Presentation::from_json(&j)
    }

    pub fn from_json(j: &PresentationJson) -> Result<Presentation> {
        let field = j.field.to_field()?;
        let vertices = j.vertices.clone();
        let vix = |l: &str| {
            vertices
                .iter()
                .position(|v| v == l)
                .ok_or_else(|| Error::Input(format!("unknown vertex {l:?}")))
        };
        let arrows = j
            .arrows
            .iter()
            .map(|a| Ok(Arrow { name: a.name.clone(), source: vix(&a.from)?, target: vix(&a.to)? }))
            .collect::<Result<Vec<_>>>()?;
        let quiver = Quiver { vertices: vertices.clone(), arrows };
        let mut relations = Vec::new();
        for r in &j.relations {
            let mut rel = Vec::new();
            for t in r {
                let c = field.parse(&t.coeff)?;
                let path = t
                    .path
                    .iter()
                    .map(|n| {
                        quiver.arrow_index(n).ok_or_else(|| Error::Input(format!("unknown arrow {n:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                rel.push((c, path));
            }
            relations.push(rel);
        }
        let order = j.order.iter().map(|l| vix(l)).collect::<Result<Vec<_>>>()?;
        let p = Presentation { field, quiver, relations, order, max_path_length: j.max_path_length };
        p.validate()?;
        Ok(p)
    }

    pub fn to_json(&self) -> PresentationJson {
        let q = &self.quiver;
        PresentationJson {
            field: FieldJson::from_field(self.field),
            vertices: q.vertices.clone(),
            arrows: q
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    name: a.name.clone(),
                    from: q.vertices[a.source].clone(),
                    to: q.vertices[a.target].clone(),
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|(c, p)| TermJson {
                            coeff: c.to_string(),
                            path: p.iter().map(|&i| q.arrows[i].name.clone()).collect(),
                        })
                        .collect()
                })
                .collect(),
            order: self.order.iter().map(|&i| q.vertices[i].clone()).collect(),
            max_path_length: self.max_path_length,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("presentation serializes")
    }

    /// Presentation of the opposite algebra: arrows reversed, paths read
    /// backwards.
    pub fn opposite(&self) -> Presentation {
        let arrows = self
            .quiver
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
            .collect();
        let relations = self
            .relations
            .iter()
            .map(|r| r.iter().map(|(c, p)| (c.clone(), p.iter().rev().copied().collect())).collect())
            .collect();
        Presentation {
            field: self.field,
            quiver: Quiver { vertices: self.quiver.vertices.clone(), arrows },
            relations,
            order: self.order.clone(),
            max_path_length: self.max_path_length,
        }
    }

    /// Source and target of a nonempty path in product notation.
    pub fn path_ends(&self, path: &[usize]) -> Result<(usize, usize)> {
        let a = &self.quiver.arrows;
        let first = path.first().ok_or_else(|| Error::Input("empty path in relation".into()))?;
        for w in path.windows(2) {
            if a[w[0]].source != a[w[1]].target {
                return Err(Error::Input(format!(
                    "path {} is not composable",
                    path.iter().map(|&i| a[i].name.as_str()).collect::<Vec<_>>().join("·")
                )));
            }
        }
        Ok((a[*path.last().unwrap()].source, a[*first].target))
    }

    pub fn validate(&self) -> Result<()> {
        let q = &self.quiver;
        if q.vertices.is_empty() {
            return Err(Error::Input("quiver has no vertices".into()));
        }
        let mut seen = HashSet::new();
        for v in &q.vertices {
            if !seen.insert(v) {
                return Err(Error::Input(format!("duplicate vertex {v:?}")));
            }
        }
        let mut seen = HashSet::new();
        for a in &q.arrows {
            if !seen.insert(&a.name) {
                return Err(Error::Input(format!("duplicate arrow {:?}", a.name)));
            }
            if a.source >= q.vertices.len() || a.target >= q.vertices.len() {
                return Err(Error::Input(format!("arrow {:?} has a bad endpoint", a.name)));
            }
        }
        for r in &self.relations {
            let mut ends = None;
            for (c, p) in r {
                if c.field() != self.field {
                    return Err(Error::Input("coefficient outside the ground field".into()));
                }
                let e = self.path_ends(p)?;
                if *ends.get_or_insert(e) != e {
                    return Err(Error::Input("relation mixes non-parallel paths".into()));
                }
            }
        }
        let mut sorted = self.order.clone();
        sorted.sort_unstable();
        if sorted != (0..q.vertices.len()).collect::<Vec<_>>() {
            return Err(Error::Input("order must list every vertex exactly once".into()));
        }
        if self.max_path_length == 0 {
            return Err(Error::Input("max_path_length must be positive".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const S82: &str = r#"{"field":{"kind":"Q"},"vertices":["1","2"],
        "arrows":[{"name":"alpha","from":"2","to":"1"},{"name":"beta","from":"2","to":"1"},
                  {"name":"gamma","from":"1","to":"2"}],
        "relations":[[{"coeff":"1","path":["gamma","beta"]}],[{"coeff":"1","path":["alpha","gamma","alpha"]}]],
        "order":["1","2"],"max_path_length":32}"#;

    #[test]
    fn parses_and_round_trips() {
        let p = Presentation::from_json_str(S82).unwrap();
        assert_eq!(p.quiver.arrows.len(), 3);
        assert_eq!(p.relations.len(), 2);
        let j = p.to_json();
        let back = Presentation::from_json(&j).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_non_composable_relation() {
        let bad = S82.replace(r#"["gamma","beta"]"#, r#"["beta","gamma","gamma"]"#);
        assert!(matches!(Presentation::from_json_str(&bad), Err(Error::Input(_))));
    }

    #[test]
    fn rejects_bad_order_and_field() {
        let bad = S82.replace(r#""order":["1","2"]"#, r#""order":["1"]"#);
        assert!(Presentation::from_json_str(&bad).is_err());
        let bad = S82.replace(r#"{"kind":"Q"}"#, r#"{"kind":"GF","p":8}"#);
        assert!(Presentation::from_json_str(&bad).is_err());
    }

    #[test]
    fn default_cap_applies() {
        let s = S82.replace(r#","max_path_length":32"#, "");
        assert_eq!(Presentation::from_json_str(&s).unwrap().max_path_length, 32);
    }
}
