use serde::{Deserialize, Serialize};

use super::curve::{CurveKind, Mat3, ProjectiveCurve};
use crate::algebra::rational::parse;
use crate::error::{Error, Result};

/// `d` lines followed by `k` smooth conics. Curve indices run over lines
/// first (`0..d`), then conics (`d..d+k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    lines: Vec<ProjectiveCurve>,
    conics: Vec<ProjectiveCurve>,
}

impl Arrangement {
    pub fn new(lines: Vec<ProjectiveCurve>, conics: Vec<ProjectiveCurve>) -> Result<Self> {
        if lines.iter().any(|c| c.kind() != CurveKind::Line) {
            return Err(Error::InvalidInput("conic given in the line list".into()));
        }
        if conics.iter().any(|c| c.kind() != CurveKind::Conic) {
            return Err(Error::InvalidInput("line given in the conic list".into()));
        }
        let arr = Arrangement { lines, conics };
        let curves = arr.curves();
        for i in 0..curves.len() {
            for j in i + 1..curves.len() {
                if curves[i] == curves[j] {
                    return Err(Error::DuplicateCurve(i, j));
                }
            }
        }
        Ok(arr)
    }

    pub fn d(&self) -> usize {
        self.lines.len()
    }

    pub fn k(&self) -> usize {
        self.conics.len()
    }

    pub fn len(&self) -> usize {
        self.d() + self.k()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn lines(&self) -> &[ProjectiveCurve] {
        &self.lines
    }

    pub fn conics(&self) -> &[ProjectiveCurve] {
        &self.conics
    }

    pub fn curves(&self) -> Vec<&ProjectiveCurve> {
        self.lines.iter().chain(self.conics.iter()).collect()
    }

    pub fn curve(&self, i: usize) -> &ProjectiveCurve {
        if i < self.d() {
            &self.lines[i]
        } else {
            &self.conics[i - self.d()]
        }
    }

    /// The same arrangement in coordinates `v` where old coordinates are `M v`.
    pub fn pullback(&self, m: &Mat3) -> Result<Self> {
        let lines = self.lines.iter().map(|c| c.pullback(m)).collect::<Result<_>>()?;
        let conics = self.conics.iter().map(|c| c.pullback(m)).collect::<Result<_>>()?;
        Arrangement::new(lines, conics)
    }

    pub fn to_file(&self) -> ArrangementFile {
        ArrangementFile {
            lines: self.lines.iter().map(|c| c.coeff_strings().into_iter().map(Coefficient::Text).collect()).collect(),
            conics: self
                .conics
                .iter()
                .map(|c| c.coeff_strings().into_iter().map(Coefficient::Text).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: ArrangementFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        file.build()
    }
}

/// A coefficient in a file: a rational string such as `"-3/7"`, or an integer.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Integer(i64),
    Text(String),
}

/// On-disk form: `{"lines": [[a, b, c], ...], "conics": [[x2, y2, z2, xy, xz, yz], ...]}`.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ArrangementFile {
    #[serde(default)]
    pub lines: Vec<Vec<Coefficient>>,
    #[serde(default)]
    pub conics: Vec<Vec<Coefficient>>,
}

impl ArrangementFile {
    pub fn build(&self) -> Result<Arrangement> {
        let read = |row: &[Coefficient], n: usize| -> Result<Vec<_>> {
            if row.len() != n {
                return Err(Error::Parse(format!("expected {n} coefficients, got {}", row.len())));
            }
            row.iter()
                .map(|c| match c {
                    Coefficient::Integer(v) => Ok(crate::algebra::rational::rat(*v)),
                    Coefficient::Text(s) => parse(s),
                })
                .collect()
        };
        let mut lines = Vec::new();
        for row in &self.lines {
            let c = read(row, 3)?;
            lines.push(ProjectiveCurve::line(c[0].clone(), c[1].clone(), c[2].clone())?);
        }
        let mut conics = Vec::new();
        for row in &self.conics {
            let c = read(row, 6)?;
            let arr: [_; 6] = c.try_into().expect("length checked");
            conics.push(ProjectiveCurve::conic(arr)?);
        }
        Arrangement::new(lines, conics)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let src = r#"{"lines": [[1, 0, 0], ["0", "1/2", "0"]], "conics": [["1","1","-1","0","0","0"]]}"#;
        let a = Arrangement::from_json(src).unwrap();
        assert_eq!((a.d(), a.k()), (2, 1));
        let b = Arrangement::from_json(&a.to_json()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn duplicates_and_bad_rows() {
        let dup = r#"{"lines": [[1, 2, 3], [2, 4, 6]]}"#;
        assert_eq!(Arrangement::from_json(dup), Err(Error::DuplicateCurve(0, 1)));
        let short = r#"{"lines": [[1, 2]]}"#;
        assert!(matches!(Arrangement::from_json(short), Err(Error::Parse(_))));
        let zero_den = r#"{"lines": [["1/0", 2, 3]]}"#;
        assert!(Arrangement::from_json(zero_den).is_err());
    }
}
