//! Hypermap input files.
//!
//! Two line-oriented formats, `key: value` per line, `#` starting a comment:
//!
//! ```text
//! format: perm          format: fp
//! degree: 5             generators: x y
//! x: (1 2 3 4 5)        relator: x^4
//! y: (1 2 3)            equation: x*y = y^2*x^2
//! ```

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use hyperdual::families::from_presentation;
use hyperdual::{OrientedHypermap, Permutation, Presentation};

#[derive(Clone, Debug)]
pub enum InputDocument {
    Perm { x: Permutation, y: Permutation },
    Fp(Presentation),
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<InputDocument> {
        let mut entries: Vec<(usize, &str, &str)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| anyhow!("line {}: expected `key: value`, found `{line}`", i + 1))?;
            entries.push((i + 1, key.trim(), value.trim()));
        }
        let format =
            single(&entries, "format")?.ok_or_else(|| anyhow!("missing `format:` line"))?;
        match format.1 {
            "perm" => parse_perm(&entries),
            "fp" => parse_fp(&entries),
            other => bail!(
                "line {}: unknown format `{other}` (expected perm or fp)",
                format.0
            ),
        }
    }

    pub fn hypermap(&self, max_cosets: usize) -> Result<OrientedHypermap> {
        match self {
            InputDocument::Perm { x, y } => Ok(OrientedHypermap::from_marks(x.clone(), y.clone())?),
            InputDocument::Fp(p) => Ok(from_presentation(p, max_cosets)?),
        }
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        match self {
            InputDocument::Fp(p) => Some(p),
            InputDocument::Perm { .. } => None,
        }
    }
}

/// The perm-format text for a hypermap.
pub fn emit(h: &OrientedHypermap) -> String {
    let mut out = String::new();
    writeln!(out, "format: perm").unwrap();
    writeln!(out, "degree: {}", h.degree()).unwrap();
    writeln!(out, "x: {}", h.x()).unwrap();
    writeln!(out, "y: {}", h.y()).unwrap();
    out
}

fn single<'a>(entries: &[(usize, &str, &'a str)], key: &str) -> Result<Option<(usize, &'a str)>> {
    let mut found = entries.iter().filter(|e| e.1 == key);
    let first = found.next().map(|e| (e.0, e.2));
    if let Some(again) = found.next() {
        bail!("line {}: `{key}` given more than once", again.0);
    }
    Ok(first)
}

fn parse_perm(entries: &[(usize, &str, &str)]) -> Result<InputDocument> {
    for &(line, key, _) in entries {
        match key {
            "format" | "degree" | "x" | "y" => {}
            other => bail!(
                "line {line}: unexpected key `{other}`; perm input has exactly two marks `x` and `y` plus `format` and `degree`"
            ),
        }
    }
    let (line, degree) =
        single(entries, "degree")?.ok_or_else(|| anyhow!("missing `degree:` line"))?;
    let degree: usize = degree.parse().ok().filter(|&d| d >= 1).ok_or_else(|| {
        anyhow!("line {line}: degree must be a positive integer, found `{degree}`")
    })?;
    let mark = |name: &str| -> Result<Permutation> {
        let (line, text) =
            single(entries, name)?.ok_or_else(|| anyhow!("missing mark `{name}:`"))?;
        Permutation::parse_cycles(text, degree)
            .with_context(|| format!("line {line}: mark `{name}`"))
    };
    let x = mark("x")?;
    let y = mark("y")?;
    Ok(InputDocument::Perm { x, y })
}

fn parse_fp(entries: &[(usize, &str, &str)]) -> Result<InputDocument> {
    let (line, gens) =
        single(entries, "generators")?.ok_or_else(|| anyhow!("missing `generators:` line"))?;
    let names: Vec<&str> = gens.split_whitespace().collect();
    if names.len() != 2 {
        bail!(
            "line {line}: a hypermap needs exactly two generators, found {}",
            names.len()
        );
    }
    if names[0] == names[1] {
        bail!("line {line}: generator names must differ");
    }
    let mut relations = Vec::new();
    for &(line, key, value) in entries {
        match key {
            "format" | "generators" => {}
            "relator" => {
                if value.contains('=') {
                    bail!("line {line}: relator contains `=`; use `equation:`");
                }
                relations.push((line, value));
            }
            "equation" => {
                if !value.contains('=') {
                    bail!("line {line}: equation needs `L = R`");
                }
                relations.push((line, value));
            }
            other => bail!("line {line}: unexpected key `{other}` in fp input"),
        }
    }
    // parse one at a time so a syntax error names its line
    for &(line, text) in &relations {
        Presentation::parse(&names, &[text]).with_context(|| format!("line {line}"))?;
    }
    let texts: Vec<&str> = relations.iter().map(|r| r.1).collect();
    Ok(InputDocument::Fp(Presentation::parse(&names, &texts)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_example() {
        let doc =
            InputDocument::parse("format: perm\ndegree: 5\nx: (1 2 3 4 5)\ny: (1 2 3)\n").unwrap();
        let h = doc.hypermap(100).unwrap();
        assert_eq!(h.order(), 60);
        assert!(doc.presentation().is_none());
    }

    #[test]
    fn fp_example_with_comments() {
        let text = "# order 20\nformat: fp\ngenerators: x y\nrelator: x^4  # x\nrelator: y^4\nequation: x*y = y^2*x^2\n";
        let doc = InputDocument::parse(text).unwrap();
        assert_eq!(doc.presentation().unwrap().relators().len(), 3);
        assert_eq!(doc.hypermap(1000).unwrap().order(), 20);
    }

    #[test]
    fn identity_mark() {
        let doc = InputDocument::parse("format: perm\ndegree: 3\nx: (1 2 3)\ny: ()\n").unwrap();
        assert_eq!(doc.hypermap(10).unwrap().order(), 3);
    }

    #[test]
    fn rejects_malformed_input() {
        let bad = [
            "degree: 3\nx: ()\ny: ()",
            "format: perm\ndegree: 3\nx: ()\ny: ()\nz: (1 2)",
            "format: perm\ndegree: 3\nx: ()\nx: ()\ny: ()",
            "format: perm\ndegree: 3\nx: (1 4)\ny: ()",
            "format: perm\ndegree: 0\nx: ()\ny: ()",
            "format: perm\ndegree: 3\nx: ()",
            "format: fp\ngenerators: x y z\nrelator: x",
            "format: fp\ngenerators: x y\nrelator: x^2*w",
            "format: fp\ngenerators: x y\nequation: x^2",
            "format: fp\ngenerators: x y\nrelator: x = y",
            "format: graph",
            "format perm",
        ];
        for text in bad {
            assert!(InputDocument::parse(text).is_err(), "{text}");
        }
    }

    #[test]
    fn emit_round_trips() {
        let doc = InputDocument::parse("format: perm\ndegree: 4\nx: (1 2)(3 4)\ny: (1 3)(2 4)\n")
            .unwrap();
        let h = doc.hypermap(10).unwrap();
        let text = emit(&h);
        assert_eq!(
            text,
            "format: perm\ndegree: 4\nx: (1 2)(3 4)\ny: (1 3)(2 4)\n"
        );
        let again = InputDocument::parse(&text).unwrap().hypermap(10).unwrap();
        assert_eq!(again.marks(), h.marks());
    }
}
