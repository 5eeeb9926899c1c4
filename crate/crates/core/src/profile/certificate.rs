//! Text certificates for discovered replacements.
//!
//! ```text
//! certificate
//! t 4
//! c 0
//! profile 3 3 3 4 ...
//! n 4
//! e 0 1
//! a 0 0 2
//! end
//! ```
//!
//! `profile` lists the target table in index order (bit `i` of the index is
//! interface `i`). The `n`, `e` and `a` lines describe the replacement
//! pattern as in [`AttachmentPattern::to_text`]. A certificate claims
//! `target[X] = profile(pattern)[X] + c` for every `X`.

use std::fmt;

use super::{compute_profile, line_err, AttachmentPattern, Cost, PatternBuilder, Profile};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub target: Profile,
    pub offset: u32,
    pub pattern: AttachmentPattern,
}

impl Certificate {
    /// Recomputes the pattern's profile and checks the claim.
    pub fn verify(&self) -> Result<()> {
        if self.target.t() != self.pattern.t() {
            return Err(Error::InvalidArgument(
                "certificate interface counts differ".into(),
            ));
        }
        let p = compute_profile(&self.pattern)?;
        match self.target.offset_over(&p) {
            Some(c) if c == self.offset => Ok(()),
            _ => Err(Error::InvalidArgument(format!(
                "pattern profile {p} plus {} is not the target {}",
                self.offset, self.target
            ))),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate")?;
        writeln!(f, "t {}", self.pattern.t())?;
        writeln!(f, "c {}", self.offset)?;
        writeln!(f, "profile {}", self.target)?;
        let body = self.pattern.to_text();
        // Skip the pattern's own `t` line.
        for line in body.lines().skip(1) {
            writeln!(f, "{line}")?;
        }
        writeln!(f, "end")
    }
}

/// Parses a sequence of certificates. Blank lines and lines starting with
/// `#` between or inside certificates are ignored.
pub fn parse_certificates(text: &str) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    let mut current: Option<(PatternBuilder, Option<u32>, Option<Vec<Cost>>)> = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        if tag.starts_with('#') {
            continue;
        }
        match (tag, current.as_mut()) {
            ("certificate", None) => current = Some((PatternBuilder::default(), None, None)),
            ("certificate", Some(_)) => return Err(line_err(line, "nested certificate")),
            (_, None) => return Err(line_err(line, format!("`{tag}` outside a certificate"))),
            ("c", Some(cur)) => {
                let v = fields
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| line_err(line, "malformed offset"))?;
                cur.1 = Some(v);
            }
            ("profile", Some(cur)) => {
                let entries = fields
                    .map(|s| s.parse::<Cost>())
                    .collect::<Result<Vec<_>>>();
                cur.2 = Some(entries.map_err(|e| line_err(line, e))?);
            }
            ("end", Some(_)) => {
                let (b, c, table) = current.take().unwrap();
                let t = b.t().ok_or_else(|| line_err(line, "missing `t` line"))?;
                let pattern = b.finish(line)?;
                let target = Profile::new(
                    t,
                    table.ok_or_else(|| line_err(line, "missing `profile` line"))?,
                )
                .map_err(|e| line_err(line, e))?;
                let offset = c.ok_or_else(|| line_err(line, "missing `c` line"))?;
                out.push(Certificate {
                    target,
                    offset,
                    pattern,
                });
            }
            (tag, Some(cur)) => {
                if !cur.0.feed(tag, &mut fields, line)? {
                    return Err(line_err(line, format!("unknown line type `{tag}`")));
                }
            }
        }
    }
    if current.is_some() {
        return Err(line_err(last, "certificate without `end`"));
    }
    Ok(out)
}
