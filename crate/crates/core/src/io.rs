//! JSON file formats for fans, systems and surface classes.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::divisor::ToricDivisor;
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::linsys::LinearSystemSpec;
use crate::surface::{PicardClass, SurfaceKind, SurfaceModel};

/// A fan given either by path (relative to the referencing file) or inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FanSource {
    Path(PathBuf),
    Inline(Fan),
}

/// `{ "fan": <file or fan>, "alpha": [...], "mults": {"<cone>": m} }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemFile {
    pub fan: FanSource,
    pub alpha: Vec<i64>,
    #[serde(default)]
    pub mults: BTreeMap<usize, i64>,
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

/// Validates a deserialized fan unless `unchecked`.
pub fn checked_fan(fan: Fan, unchecked: bool) -> Result<Fan> {
    if unchecked {
        return Ok(fan);
    }
    let report = fan.validate();
    if !report.passed() {
        return Err(Error::InvalidFan(report.summary()));
    }
    Ok(fan)
}

pub fn load_fan(path: &Path, unchecked: bool) -> Result<Fan> {
    checked_fan(read_json(path)?, unchecked)
}

impl SystemFile {
    pub fn load(path: &Path) -> Result<Self> {
        read_json(path)
    }

    pub fn from_spec(spec: &LinearSystemSpec) -> Self {
        Self {
            fan: FanSource::Inline(spec.divisor().fan().as_ref().clone()),
            alpha: spec.divisor().alpha().to_vec(),
            mults: spec.marks(),
        }
    }

    /// Builds the system; a fan path is resolved against `base_dir`.
    pub fn resolve(&self, base_dir: &Path, unchecked: bool) -> Result<LinearSystemSpec> {
        let fan = match &self.fan {
            FanSource::Path(p) => load_fan(&base_dir.join(p), unchecked)?,
            FanSource::Inline(fan) => checked_fan(fan.clone(), unchecked)?,
        };
        let divisor = ToricDivisor::new(Arc::new(fan), self.alpha.clone())?;
        LinearSystemSpec::new(divisor, &self.mults)
    }
}

/// Loads a system file, resolving its fan relative to the file.
pub fn load_system(path: &Path, unchecked: bool) -> Result<LinearSystemSpec> {
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    SystemFile::load(path)?.resolve(base, unchecked)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coeffs {
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    pub l: Option<i64>,
    #[serde(rename = "H", default, skip_serializing_if = "Option::is_none")]
    pub h: Option<i64>,
    #[serde(rename = "F", default, skip_serializing_if = "Option::is_none")]
    pub f: Option<i64>,
    #[serde(default)]
    pub m: Vec<i64>,
}

/// `{ "surface": "P2" | {"Fa": a}, "r": n, "coeffs": {"H": .., "F": .., "m": [..]} }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFile {
    pub surface: SurfaceKind,
    pub r: usize,
    pub coeffs: Coeffs,
}

impl ClassFile {
    pub fn load(path: &Path) -> Result<Self> {
        read_json(path)
    }

    pub fn from_class(class: &PicardClass) -> Self {
        let model = class.model();
        let base = class.base();
        let coeffs = match model.kind() {
            SurfaceKind::P2 => Coeffs {
                l: Some(base[0]),
                m: class.mults().to_vec(),
                ..Coeffs::default()
            },
            SurfaceKind::Fa(_) => Coeffs {
                h: Some(base[0]),
                f: Some(base[1]),
                m: class.mults().to_vec(),
                ..Coeffs::default()
            },
        };
        Self {
            surface: model.kind(),
            r: model.r(),
            coeffs,
        }
    }

    pub fn to_class(&self) -> Result<PicardClass> {
        let model = Arc::new(SurfaceModel::new(self.surface, self.r)?);
        let c = &self.coeffs;
        if c.m.len() != self.r {
            return Err(Error::Input(format!(
                "{} exceptional coefficients for r = {}",
                c.m.len(),
                self.r
            )));
        }
        let base = match (self.surface, c.l, c.h, c.f) {
            (SurfaceKind::P2, Some(l), None, None) => vec![l],
            (SurfaceKind::Fa(_), None, Some(h), Some(f)) => vec![h, f],
            (SurfaceKind::P2, ..) => {
                return Err(Error::Input(
                    "a P2 class takes exactly the coefficient L".into(),
                ))
            }
            (SurfaceKind::Fa(_), ..) => {
                return Err(Error::Input(
                    "an Fa class takes exactly the coefficients H and F".into(),
                ))
            }
        };
        PicardClass::new(model, base, c.m.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn system_file_with_path_and_string_keys() {
        let json = r#"{ "fan": "f3.json", "alpha": [0, 0, 2, 3], "mults": {"3": 5} }"#;
        let file: SystemFile = serde_json::from_str(json).unwrap();
        assert_eq!(file.fan, FanSource::Path("f3.json".into()));
        assert_eq!(file.mults.get(&3), Some(&5));
    }

    #[test]
    fn inline_fan_round_trip() {
        let fan = Fan::hirzebruch(3);
        let div = ToricDivisor::new(Arc::new(fan), vec![0, 0, 2, 3]).unwrap();
        let spec = LinearSystemSpec::new(div, &[(0, 2), (3, 3)].into_iter().collect()).unwrap();
        let file = SystemFile::from_spec(&spec);
        let text = serde_json::to_string(&file).unwrap();
        let back: SystemFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        let rebuilt = back.resolve(Path::new("."), false).unwrap();
        assert_eq!(rebuilt.mults(), spec.mults());
        assert_eq!(rebuilt.effective_dim(), 21);
    }

    #[test]
    fn invalid_inline_fan_is_rejected_unless_unchecked() {
        let json = r#"{ "fan": {"dim": 2, "rays": [[1,0],[0,1],[-1,-1]], "cones": [[0,1],[1,2]]},
                        "alpha": [0, 0, 1] }"#;
        let file: SystemFile = serde_json::from_str(json).unwrap();
        assert!(matches!(
            file.resolve(Path::new("."), false),
            Err(Error::InvalidFan(_))
        ));
    }

    #[test]
    fn class_file_formats() {
        let json = r#"{ "surface": {"Fa": 6}, "r": 2, "coeffs": {"H": 4, "F": 0, "m": [3, 3]} }"#;
        let file: ClassFile = serde_json::from_str(json).unwrap();
        let class = file.to_class().unwrap();
        assert_eq!(class.base(), &[4, 0]);
        assert_eq!(ClassFile::from_class(&class), file);

        let json = r#"{ "surface": "P2", "r": 1, "coeffs": {"L": 3, "m": [2]} }"#;
        let file: ClassFile = serde_json::from_str(json).unwrap();
        assert_eq!(file.to_class().unwrap().base(), &[3]);
        let text = serde_json::to_string(&file).unwrap();
        assert!(text.contains(r#""surface":"P2""#));

        let bad = r#"{ "surface": "P2", "r": 1, "coeffs": {"H": 3, "F": 1, "m": [2]} }"#;
        let file: ClassFile = serde_json::from_str(bad).unwrap();
        assert!(file.to_class().is_err());
        let bad = r#"{ "surface": "P2", "r": 2, "coeffs": {"L": 3, "m": [2]} }"#;
        let file: ClassFile = serde_json::from_str(bad).unwrap();
        assert!(file.to_class().is_err());
    }
}
