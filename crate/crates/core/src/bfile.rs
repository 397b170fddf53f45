//! Reader for OEIS b-files: one `index value` pair per line, `#` comments,
//! blank lines ignored. Indices must be consecutive.

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    /// Sequence name taken from a leading `# Axxxxxx` comment, if any.
    pub name: Option<String>,
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

impl BFile {
    /// Term with OEIS index `index`.
    pub fn get(&self, index: i64) -> Option<&BigInt> {
        let i = usize::try_from(index - self.offset).ok()?;
        self.terms.get(i)
    }
}

pub fn parse(text: &str) -> Result<BFile> {
    let mut name = None;
    let mut offset = None;
    let mut terms = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line_no = lineno + 1;
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let word = comment.trim();
            if name.is_none() && terms.is_empty() && is_a_number(word) {
                name = Some(word.to_string());
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::BFile {
                line: line_no,
                reason: format!("expected `index value`, got {line:?}"),
            });
        };
        let idx: i64 = idx.parse().map_err(|_| Error::BFile {
            line: line_no,
            reason: format!("bad index {idx:?}"),
        })?;
        let val: BigInt = val.parse().map_err(|_| Error::BFile {
            line: line_no,
            reason: format!("bad value {val:?}"),
        })?;
        let start = *offset.get_or_insert(idx);
        let expected = start + terms.len() as i64;
        if idx != expected {
            return Err(Error::BFile {
                line: line_no,
                reason: format!("index {idx} out of sequence, expected {expected}"),
            });
        }
        terms.push(val);
    }
    Ok(BFile {
        name,
        offset: offset.unwrap_or(0),
        terms,
    })
}

fn is_a_number(word: &str) -> bool {
    word.len() == 7 && word.starts_with('A') && word[1..].bytes().all(|b| b.is_ascii_digit())
}
