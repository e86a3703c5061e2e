//! Text format for generator files.
//!
//! One generator per line: m whitespace-separated point images (0-indexed),
//! optionally preceded by `t=<bitstring>` for a translation part.  Lines
//! starting with `#` are comments; a comment of the form `# order=N` is
//! parsed as the claimed group order, which is carried as metadata only and
//! never trusted by any verification.

use crate::error::{Error, Result};
use crate::groups::haut::{GroupGens, HammingAut};
use crate::groups::perm::Perm;
use crate::word::Word;
use std::path::Path;

#[derive(Clone, Debug)]
pub struct GeneratorFile {
    pub group: GroupGens,
    /// Group order claimed in the file header, if any; informational only.
    pub claimed_order: Option<u128>,
    pub comments: Vec<String>,
}

impl GeneratorFile {
    pub fn parse(label: &str, text: &str) -> Result<GeneratorFile> {
        let mut elements: Vec<HammingAut> = Vec::new();
        let mut claimed_order = None;
        let mut comments = Vec::new();
        let mut m: Option<usize> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(c) = line.strip_prefix('#') {
                let c = c.trim();
                if let Some(v) = c.strip_prefix("order=") {
                    claimed_order = Some(v.trim().parse().map_err(|_| {
                        Error::Parse(format!("line {}: bad order value {v:?}", lineno + 1))
                    })?);
                } else if !c.is_empty() {
                    comments.push(c.to_string());
                }
                continue;
            }
            let mut tokens = line.split_whitespace().peekable();
            let mut t: Option<Word> = None;
            if let Some(first) = tokens.peek() {
                if let Some(bits) = first.strip_prefix("t=") {
                    t = Some(bits.parse()?);
                    tokens.next();
                }
            }
            let images: Vec<usize> = tokens
                .map(|s| {
                    s.parse::<usize>().map_err(|_| {
                        Error::Parse(format!("line {}: bad image {s:?}", lineno + 1))
                    })
                })
                .collect::<Result<_>>()?;
            let n = images.len();
            match m {
                None => m = Some(n),
                Some(prev) if prev != n => {
                    return Err(Error::Parse(format!(
                        "line {}: degree {n} does not match earlier degree {prev}",
                        lineno + 1
                    )));
                }
                _ => {}
            }
            let p = Perm::new(images)?;
            let t = t.unwrap_or_else(|| Word::zero(n));
            if t.len() != n {
                return Err(Error::Parse(format!(
                    "line {}: translation length {} does not match degree {n}",
                    lineno + 1,
                    t.len()
                )));
            }
            elements.push(HammingAut::new(t, p)?);
        }
        let m = m.ok_or_else(|| Error::Parse("no generators in file".into()))?;
        Ok(GeneratorFile {
            group: GroupGens::new(m, label, elements)?,
            claimed_order,
            comments,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        if let Some(o) = self.claimed_order {
            out.push_str(&format!("# order={o}\n"));
        }
        for g in &self.group.gens {
            if !g.t.is_zero() {
                out.push_str(&format!("t={} ", g.t));
            }
            let images: Vec<String> = g.p.images().iter().map(|i| i.to_string()).collect();
            out.push_str(&images.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn load(label: &str, path: &Path) -> Result<GeneratorFile> {
        let text = std::fs::read_to_string(path)?;
        GeneratorFile::parse(label, &text)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.render())?;
        Ok(())
    }
}

/// Read `<data_dir>/groups/<name>.perms`.
pub fn load_group(name: &str, data_dir: &Path) -> Result<GroupGens> {
    let path = data_dir.join("groups").join(format!("{name}.perms"));
    Ok(GeneratorFile::load(name, &path)?.group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_mixed_generators() {
        let text = "# sample file\n# order=12\n2 0 1\nt=101 0 2 1\n";
        let f = GeneratorFile::parse("sample", text).unwrap();
        assert_eq!(f.group.m, 3);
        assert_eq!(f.group.gens.len(), 2);
        assert_eq!(f.claimed_order, Some(12));
        assert!(f.group.gens[0].t.is_zero());
        assert_eq!(f.group.gens[1].t.to_string(), "101");
        assert_eq!(f.comments, vec!["sample file"]);
    }

    #[test]
    fn render_parse_round_trip() {
        let text = "# provenance note\n1 2 0 3\nt=1100 3 2 1 0\n";
        let f = GeneratorFile::parse("g", text).unwrap();
        let again = GeneratorFile::parse("g", &f.render()).unwrap();
        assert_eq!(f.group.gens.len(), again.group.gens.len());
        for (a, b) in f.group.gens.iter().zip(&again.group.gens) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn inconsistent_degrees_rejected() {
        assert!(GeneratorFile::parse("x", "0 1\n0 1 2\n").is_err());
        assert!(GeneratorFile::parse("x", "t=111 0 1\n").is_err());
        assert!(GeneratorFile::parse("x", "").is_err());
        assert!(GeneratorFile::parse("x", "0 0 1\n").is_err());
    }
}
