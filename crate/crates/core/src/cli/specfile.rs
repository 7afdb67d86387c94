use std::collections::BTreeSet;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{self, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::obstruction::VarietySpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecFileError {
    #[error("line {line}, column {column}, at `{path}`: {message}")]
    Syntax {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported spec file version {0} (expected 1)")]
    Version(u32),
    #[error("duplicate variety name `{0}`")]
    DuplicateName(String),
    #[error("chi_window must be nonnegative, got {0}")]
    BadWindow(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_window: Option<i64>,
}

/// A spec plus its unique name in the file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSpec {
    pub name: String,
    pub spec: VarietySpec,
}

impl Serialize for NamedSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut value = serde_json::to_value(&self.spec).map_err(ser::Error::custom)?;
        let obj = value
            .as_object_mut()
            .ok_or_else(|| ser::Error::custom("spec is not an object"))?;
        obj.insert("name".into(), Value::String(self.name.clone()));
        value.serialize(s)
    }
}

impl<'de> Deserialize<'de> for NamedSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut map = serde_json::Map::<String, Value>::deserialize(d)?;
        let name = match map.remove("name") {
            Some(Value::String(s)) if !s.is_empty() => s,
            Some(_) => return Err(de::Error::custom("`name` must be a non-empty string")),
            None => return Err(de::Error::missing_field("name")),
        };
        let spec =
            VarietySpec::deserialize(Value::Object(map)).map_err(|e| de::Error::custom(format!("{name}: {e}")))?;
        Ok(NamedSpec { name, spec })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub version: u32,
    pub varieties: Vec<NamedSpec>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub options: Options,
}

fn is_default(o: &Options) -> bool {
    o == &Options::default()
}

impl fmt::Display for SpecFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = serde_json::to_string_pretty(&serde_json::to_value(self).map_err(|_| fmt::Error)?)
            .map_err(|_| fmt::Error)?;
        f.write_str(&text)
    }
}

/// Parses and validates a spec file, reporting the first error with its
/// field path and line.
pub fn parse_spec_file(text: &str) -> Result<SpecFile, SpecFileError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let file: SpecFile = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        SpecFileError::Syntax {
            path,
            line: inner.line(),
            column: inner.column(),
            message: inner.to_string(),
        }
    })?;
    de.end().map_err(|e| SpecFileError::Syntax {
        path: ".".into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.version != 1 {
        return Err(SpecFileError::Version(file.version));
    }
    let mut seen = BTreeSet::new();
    for v in &file.varieties {
        if !seen.insert(v.name.as_str()) {
            return Err(SpecFileError::DuplicateName(v.name.clone()));
        }
    }
    if let Some(w) = file.options.chi_window {
        if w < 0 {
            return Err(SpecFileError::BadWindow(w));
        }
    }
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstruction::VarietyKind;

    #[test]
    fn minimal_file() {
        let f = parse_spec_file(r#"{"version":1,"varieties":[{"name":"q3","kind":"quadric","n":3}]}"#).unwrap();
        assert_eq!(f.varieties.len(), 1);
        assert_eq!(f.varieties[0].name, "q3");
        assert_eq!(f.varieties[0].spec.kind, VarietyKind::Quadric { n: 3 });
    }

    #[test]
    fn alias_and_errors() {
        let f = parse_spec_file(r#"{"version":1,"varieties":[{"name":"x","kind":"quartic_surface_generic","d":4}]}"#)
            .unwrap();
        assert_eq!(f.varieties[0].spec.kind, VarietyKind::K3Generic { d: 4 });
        let dup = r#"{"version":1,"varieties":[{"name":"a","kind":"enriques"},{"name":"a","kind":"fake_p2"}]}"#;
        assert_eq!(parse_spec_file(dup), Err(SpecFileError::DuplicateName("a".into())));
        assert_eq!(
            parse_spec_file(r#"{"version":2,"varieties":[]}"#),
            Err(SpecFileError::Version(2))
        );
        let bad = "{\"version\":1,\n\"varieties\":[{\"name\":\"a\",\"kind\":\"blob\"}]}";
        match parse_spec_file(bad) {
            Err(SpecFileError::Syntax {
                path, line, message, ..
            }) => {
                assert_eq!(path, "varieties[0]");
                assert_eq!(line, 2);
                assert!(message.contains("unknown kind"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_spec_file(r#"{"version":1,"varieties":[],"extra":0}"#),
            Err(SpecFileError::Syntax { .. })
        ));
    }

    #[test]
    fn round_trip() {
        let text = r#"{"version":1,"options":{"chi_window":4},"varieties":[
            {"name":"p","kind":"product","factors":[{"kind":"curve","genus":2},{"kind":"curve","genus":0}]},
            {"name":"g","kind":"pic_z_general","dim":2,"index":1,"ample_generator_has_section":true}]}"#;
        let f = parse_spec_file(text).unwrap();
        assert_eq!(parse_spec_file(&f.to_string()).unwrap(), f);
    }
}
