//! JSON instance and solution files.
//!
//! Instance: `{"A":[x,y],"B":[x,y],"C":[x,y],"D":[x,y]}`; omitting `D` gives
//! a plain triangle for the classical problem.
//!
//! Solution: `{"case":…,"aux":{"M":[x,y],…},"vertices":[{"point":[x,y],
//! "side":"AB","param":t},…],"perimeter":p,"upper_bound":u}`.
//!
//! Numbers are written in the shortest form that parses back to the same
//! `f64`, so files round-trip exactly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classic::ClassicSolution;
use crate::error::Result;
use crate::geom::{Point, Tolerances};
use crate::quad::{validate, Quadrangle, Solution};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(rename = "A")]
    pub a: [f64; 2],
    #[serde(rename = "B")]
    pub b: [f64; 2],
    #[serde(rename = "C")]
    pub c: [f64; 2],
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    pub d: Option<[f64; 2]>,
}

/// A parsed instance, either a triangle or a quadrangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Instance {
    Triangle([Point; 3]),
    Quadrangle(Quadrangle),
}

fn point(xy: [f64; 2]) -> Result<Point> {
    Point::try_new(xy[0], xy[1])
}

impl InstanceFile {
    pub fn from_quadrangle(q: &Quadrangle) -> Self {
        InstanceFile { a: q.a().into(), b: q.b().into(), c: q.c().into(), d: Some(q.d().into()) }
    }

    pub fn points(&self) -> Result<Vec<Point>> {
        let mut pts = vec![point(self.a)?, point(self.b)?, point(self.c)?];
        if let Some(d) = self.d {
            pts.push(point(d)?);
        }
        Ok(pts)
    }

    /// Validates the instance. Triangles are only checked for finiteness here.
    pub fn to_instance(&self, tol: &Tolerances) -> Result<Instance> {
        let pts = self.points()?;
        match pts[..] {
            [a, b, c, d] => Ok(Instance::Quadrangle(validate(a, b, c, d, tol)?)),
            [a, b, c] => Ok(Instance::Triangle([a, b, c])),
            _ => unreachable!("three or four points"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexRecord {
    pub point: [f64; 2],
    pub side: String,
    pub param: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub case: String,
    pub aux: BTreeMap<String, [f64; 2]>,
    pub vertices: Vec<VertexRecord>,
    pub perimeter: f64,
    pub upper_bound: f64,
}

impl From<&Solution> for SolutionFile {
    fn from(s: &Solution) -> Self {
        SolutionFile {
            case: s.case.as_str().to_owned(),
            aux: s.named_aux().into_iter().map(|(k, p)| (k.to_owned(), p.into())).collect(),
            vertices: s
                .triangle
                .vertices
                .iter()
                .map(|v| VertexRecord { point: v.point.into(), side: v.side.as_str().to_owned(), param: v.param })
                .collect(),
            perimeter: s.perimeter,
            upper_bound: s.upper_bound,
        }
    }
}

impl From<&ClassicSolution> for SolutionFile {
    /// Vertex `i` is reported on the host side opposite host vertex `i`,
    /// with `param` measured from the first letter of the side tag.
    fn from(s: &ClassicSolution) -> Self {
        let [a, b, c] = s.host;
        let sides = [("BC", b, c), ("CA", c, a), ("AB", a, b)];
        let vertices = s
            .vertices
            .iter()
            .zip(sides)
            .map(|(v, (tag, s0, s1))| {
                let d = s1 - s0;
                let t = ((*v - s0).dot(d) / d.norm_squared()).clamp(0.0, 1.0);
                VertexRecord { point: (*v).into(), side: tag.to_owned(), param: t }
            })
            .collect();
        SolutionFile {
            case: s.kind.as_str().to_owned(),
            aux: BTreeMap::new(),
            vertices,
            perimeter: s.perimeter,
            upper_bound: s.upper_bound(),
        }
    }
}

impl SolutionFile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("solution files serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn vertex_points(&self) -> Result<Vec<Point>> {
        self.vertices.iter().map(|v| point(v.point)).collect()
    }

    pub fn aux_points(&self) -> Result<Vec<(String, Point)>> {
        self.aux.iter().map(|(k, v)| Ok((k.clone(), point(*v)?))).collect()
    }
}

impl InstanceFile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance files serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::solve;
    use proptest::prelude::*;

    fn dart() -> Quadrangle {
        let p = Point::new;
        Quadrangle::new(p(0.0, 0.0), p(4.0, 3.0), p(2.0, 0.0), p(4.0, -3.0)).unwrap()
    }

    #[test]
    fn instance_layout() {
        let json = InstanceFile::from_quadrangle(&dart()).to_json();
        let compact: String = json.split_whitespace().collect();
        assert_eq!(compact, r#"{"A":[0.0,0.0],"B":[4.0,3.0],"C":[2.0,0.0],"D":[4.0,-3.0]}"#);
    }

    #[test]
    fn triangle_instances_parse() {
        let f = InstanceFile::from_json(r#"{"A":[0,0],"B":[1,0],"C":[0.5,0.8]}"#).unwrap();
        assert!(matches!(f.to_instance(&Tolerances::DEFAULT).unwrap(), Instance::Triangle(_)));
    }

    #[test]
    fn bad_instances() {
        assert!(InstanceFile::from_json(r#"{"A":[0,0],"B":[1,0]}"#).is_err());
        assert!(InstanceFile::from_json(r#"{"A":[0,0],"B":[1,0],"C":[NaN,0]}"#).is_err());
        assert!(InstanceFile::from_json(r#"{"A":[0,0],"B":[1,0],"C":[1e999,0]}"#).is_err());
        assert!(InstanceFile::from_json(r#"{"A":[0,0],"B":[1,0],"C":[0,1],"E":[1,1]}"#).is_err());
    }

    #[test]
    fn solution_layout() {
        let file = SolutionFile::from(&solve(&dart()).unwrap());
        let v: serde_json::Value = serde_json::from_str(&file.to_json()).unwrap();
        assert_eq!(v["case"], "CaseA");
        assert_eq!(v["aux"]["M"][1], 1.5);
        assert_eq!(v["vertices"][2]["side"], "VertexC");
        assert_eq!(v["upper_bound"], 6.0);
    }

    proptest! {
        #[test]
        fn solution_files_round_trip_exactly(
            xs in prop::array::uniform4(-1e3..1e3f64),
            per in 1e-9..1e9f64,
        ) {
            let file = SolutionFile {
                case: "CaseB_missAB".into(),
                aux: [("W".to_owned(), [xs[0], xs[1]])].into_iter().collect(),
                vertices: vec![VertexRecord { point: [xs[2], xs[3]], side: "BC".into(), param: xs[0].abs() / 1e3 }],
                perimeter: per,
                upper_bound: per * 2.0,
            };
            let back = SolutionFile::from_json(&file.to_json()).unwrap();
            prop_assert_eq!(back, file);
        }
    }
}
