//! Text formats: code-spec files and word files.
//!
//! A code-spec file is UTF-8 `key = value` lines; blank lines and lines
//! starting with `#` are ignored.
//!
//! ```text
//! field.p = 2
//! field.m = 3
//! field.modulus = 1,1,0,1
//! code.type = bch
//! n = 7
//! delta = 3
//! b = 1
//! subfield.m = 1
//! ```
//!
//! `rs` takes `alpha` and `k`; `grs` adds `u`; `alt` adds `subfield.m`;
//! `bch` takes `n`, `delta`, `b` and `subfield.m`. Keys that do not belong
//! to the selected code type are rejected.
//!
//! Word files hold one word per line as whitespace-separated canonical
//! integers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::codes::{AltCode, BchCode, Code, CodeError, GrsCode, Word};
use crate::field::{parse_int_list, Elem, Field, FieldError};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key {key:?}")]
    DuplicateKey { line: usize, key: String },
    #[error("missing key {0:?}")]
    MissingKey(&'static str),
    #[error("key {key:?} does not apply to code type {code_type}")]
    NotApplicable { key: String, code_type: String },
    #[error("bad value for {key}: {value:?}")]
    BadValue { key: String, value: String },
    #[error("unknown code type {0:?} (expected rs, grs, alt or bch)")]
    UnknownType(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

const KEYS: &[&str] =
    &["field.p", "field.m", "field.modulus", "code.type", "alpha", "u", "k", "n", "delta", "b", "subfield.m"];

fn allowed_keys(code_type: &str) -> Option<&'static [&'static str]> {
    Some(match code_type {
        "rs" => &["alpha", "k"],
        "grs" => &["alpha", "u", "k"],
        "alt" => &["alpha", "u", "k", "subfield.m"],
        "bch" => &["n", "delta", "b", "subfield.m"],
        _ => return None,
    })
}

struct Entries(BTreeMap<&'static str, String>);

impl Entries {
    fn get(&self, key: &'static str) -> Result<&str, SpecError> {
        self.0.get(key).map(String::as_str).ok_or(SpecError::MissingKey(key))
    }

    fn parse<T: std::str::FromStr>(&self, key: &'static str) -> Result<T, SpecError> {
        let v = self.get(key)?;
        v.parse().map_err(|_| SpecError::BadValue { key: key.into(), value: v.into() })
    }

    fn list(&self, key: &'static str) -> Result<Vec<u64>, SpecError> {
        let v = self.get(key)?;
        parse_int_list(v).map_err(|_| SpecError::BadValue { key: key.into(), value: v.into() })
    }

    fn elems(&self, field: &Field, key: &'static str) -> Result<Vec<Elem>, SpecError> {
        Ok(self.list(key)?.into_iter().map(|x| field.elem(x)).collect::<Result<_, _>>()?)
    }
}

/// Parses a code-spec file and constructs the code.
pub fn parse_code_spec(text: &str) -> Result<Code, SpecError> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or(SpecError::Syntax { line })?;
        let key = key.trim();
        let known = KEYS.iter().find(|&&k| k == key).ok_or_else(|| SpecError::UnknownKey { line, key: key.into() })?;
        if map.insert(*known, value.trim().to_string()).is_some() {
            return Err(SpecError::DuplicateKey { line, key: key.into() });
        }
    }
    let entries = Entries(map);
    let code_type = entries.get("code.type")?.to_string();
    let allowed = allowed_keys(&code_type).ok_or_else(|| SpecError::UnknownType(code_type.clone()))?;
    for key in entries.0.keys() {
        if !key.starts_with("field.") && *key != "code.type" && !allowed.contains(key) {
            return Err(SpecError::NotApplicable { key: key.to_string(), code_type });
        }
    }

    let p: u64 = entries.parse("field.p")?;
    let m: usize = entries.parse("field.m")?;
    let field = Field::new(p, m, &entries.list("field.modulus")?)?;
    let subfield_order = |entries: &Entries| -> Result<u64, SpecError> {
        let d: u32 = entries.parse("subfield.m")?;
        p.checked_pow(d).ok_or_else(|| SpecError::BadValue { key: "subfield.m".into(), value: d.to_string() })
    };

    let code = match code_type.as_str() {
        "rs" => Code::Grs(GrsCode::reed_solomon(&field, entries.elems(&field, "alpha")?, entries.parse("k")?)?),
        "grs" => Code::Grs(GrsCode::new(
            &field,
            entries.elems(&field, "alpha")?,
            entries.elems(&field, "u")?,
            entries.parse("k")?,
        )?),
        "alt" => {
            let grs = GrsCode::new(
                &field,
                entries.elems(&field, "alpha")?,
                entries.elems(&field, "u")?,
                entries.parse("k")?,
            )?;
            Code::Alt(AltCode::new(grs, subfield_order(&entries)?)?)
        }
        "bch" => Code::Bch(BchCode::new(
            &field,
            subfield_order(&entries)?,
            entries.parse("n")?,
            entries.parse("delta")?,
            entries.parse("b")?,
        )?),
        _ => unreachable!("type checked above"),
    };
    Ok(code)
}

#[derive(Debug, Error)]
pub enum WordError {
    #[error("line {line}: bad symbol {token:?}")]
    BadSymbol { line: usize, token: String },
    #[error("line {line}: expected {expected} symbols, got {got}")]
    Length { line: usize, expected: usize, got: usize },
}

/// Parses a word file; blank lines are skipped. Returns `(line number, word)` pairs.
pub fn parse_words(text: &str, field: &Field, len: usize) -> Result<Vec<(usize, Word)>, WordError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let word = raw
            .split_whitespace()
            .map(|t| {
                t.parse::<u64>()
                    .ok()
                    .and_then(|v| field.elem(v).ok())
                    .ok_or_else(|| WordError::BadSymbol { line, token: t.into() })
            })
            .collect::<Result<Word, _>>()?;
        if word.len() != len {
            return Err(WordError::Length { line, expected: len, got: word.len() });
        }
        out.push((line, word));
    }
    Ok(out)
}

/// Single-space separated canonical integers.
pub fn format_word(word: &[Elem]) -> String {
    let mut s = String::with_capacity(word.len() * 3);
    for (i, x) in word.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        write!(s, "{x}").unwrap();
    }
    s
}
