//! Free-group words, finite presentations and Todd–Coxeter coset enumeration.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inverted(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    fn column(self) -> usize {
        2 * self.generator + self.inverse as usize
    }
}

/// A freely reduced word in the free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut reduced: Vec<Letter> = Vec::new();
        for l in letters {
            if reduced.last() == Some(&l.inverted()) {
                reduced.pop();
            } else {
                reduced.push(l);
            }
        }
        Word { letters: reduced }
    }

    pub fn empty() -> Word {
        Word::default()
    }

    /// `g^exponent` for generator index `g`.
    pub fn power(generator: usize, exponent: i64) -> Word {
        let letter = Letter {
            generator,
            inverse: exponent < 0,
        };
        Word {
            letters: vec![letter; exponent.unsigned_abs() as usize],
        }
    }

    pub fn generator(generator: usize) -> Word {
        Word::power(generator, 1)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        (0..exponent.unsigned_abs()).fold(Word::empty(), |acc, _| acc.concat(&base))
    }

    /// Replaces generator `i` by `images[i]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::empty();
        for l in &self.letters {
            let image = &images[l.generator];
            out = if l.inverse {
                out.concat(&image.inverse())
            } else {
                out.concat(image)
            };
        }
        out
    }

    /// Evaluates left to right with generator `i` sent to `images[i]`.
    pub fn evaluate(&self, images: &[Permutation]) -> Permutation {
        let degree = images[0].degree();
        let inverses: Vec<Permutation> = images.iter().map(Permutation::inverse).collect();
        self.letters
            .iter()
            .fold(Permutation::identity(degree), |acc, l| {
                let g = if l.inverse {
                    &inverses[l.generator]
                } else {
                    &images[l.generator]
                };
                acc.mul_unchecked(g)
            })
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return format!("{}^0", names[0]);
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let exp = if l.inverse { -(run as i64) } else { run as i64 };
            let name = &names[l.generator];
            parts.push(if exp == 1 {
                name.clone()
            } else {
                format!("{name}^{exp}")
            });
            i += run;
        }
        parts.join("*")
    }
}

/// Parses `word := term ('*' term)*`, `term := gen ('^' int)?`.
pub fn parse_word(text: &str, generator_names: &[String]) -> Result<Word> {
    Parser {
        text,
        pos: 0,
        names: generator_names,
    }
    .word()
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn word(mut self) -> Result<Word> {
        let mut letters = Vec::new();
        loop {
            self.skip_ws();
            letters.extend(self.term()?.letters);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('*') => self.pos += 1,
                Some(c) => {
                    return Err(self.error(format!("expected `*` or end of word, found `{c}`")))
                }
            }
        }
        Ok(Word::new(letters))
    }

    fn term(&mut self) -> Result<Word> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            Some(c) => return Err(self.error(format!("expected a generator, found `{c}`"))),
            None => return Err(self.error("expected a generator, found end of input")),
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        let name = &self.text[start..self.pos];
        let generator = self
            .names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        self.skip_ws();
        let mut exponent = 1i64;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            exponent = self.int()?;
        }
        Ok(Word::power(generator, exponent))
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
            self.skip_ws();
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some('0'..='9')) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.error("expected an integer exponent"));
        }
        let digits = &self.text[digits_start..self.pos];
        let negative = self.text[start..digits_start].starts_with('-');
        let value: i64 = digits.parse().map_err(|_| Error::Syntax {
            position: start,
            message: format!("exponent `{digits}` out of range"),
        })?;
        Ok(if negative { -value } else { value })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Trivial (empty after reduction) relators are dropped.
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Presentation> {
        for r in &relators {
            if let Some(l) = r
                .letters
                .iter()
                .find(|l| l.generator >= generator_names.len())
            {
                return Err(Error::UnknownGenerator(format!("#{}", l.generator)));
            }
        }
        Ok(Presentation {
            generator_names,
            relators: relators.into_iter().filter(|r| !r.is_empty()).collect(),
        })
    }

    /// Presentation from textual relators and equations `L = R`.
    pub fn parse<S: AsRef<str>>(generator_names: &[&str], relations: &[S]) -> Result<Presentation> {
        let names: Vec<String> = generator_names.iter().map(|s| s.to_string()).collect();
        let relators = relations
            .iter()
            .map(|r| parse_relation(r.as_ref(), &names))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(names, relators)
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word(text, &self.generator_names)
    }

    pub fn display_word(&self, w: &Word) -> String {
        w.to_string_with(&self.generator_names)
    }

    /// Adds `r(u, v)` for every relator `r(x, y)`, skipping duplicates.
    pub fn augment_with_assignment(&self, images: (&Word, &Word)) -> Result<Presentation> {
        if self.generator_count() != 2 {
            return Err(Error::NotTwoGenerator(self.generator_count()));
        }
        let images = [images.0.clone(), images.1.clone()];
        let mut relators = self.relators.clone();
        for r in &self.relators {
            let s = r.substitute(&images);
            if !s.is_empty() && !relators.contains(&s) {
                relators.push(s);
            }
        }
        Ok(Presentation {
            generator_names: self.generator_names.clone(),
            relators,
        })
    }
}

/// A relator, or an equation `L = R` normalized to `L·R⁻¹`.
pub fn parse_relation(text: &str, names: &[String]) -> Result<Word> {
    match text.split_once('=') {
        None => parse_word(text, names),
        Some((lhs, rhs)) => {
            if rhs.contains('=') {
                return Err(Error::Syntax {
                    position: lhs.len() + 1 + rhs.find('=').unwrap(),
                    message: "more than one `=`".into(),
                });
            }
            let l = parse_word(lhs, names)?;
            let r = parse_word(rhs, names).map_err(|e| match e {
                Error::Syntax { position, message } => Error::Syntax {
                    position: position + lhs.len() + 1,
                    message,
                },
                other => other,
            })?;
            Ok(l.concat(&r.inverse()))
        }
    }
}

/// Result of a completed enumeration: the action of each generator on the
/// cosets, numbered from 1 with the subgroup itself as coset 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetEnumeration {
    pub generator_images: Vec<Permutation>,
    pub index: usize,
}

const UNDEFINED: u32 = u32::MAX;

struct CosetTable {
    columns: usize,
    entries: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    max_live: usize,
    queue: VecDeque<usize>,
}

impl CosetTable {
    fn new(columns: usize, max_live: usize) -> CosetTable {
        CosetTable {
            columns,
            entries: vec![UNDEFINED; columns],
            parent: vec![0],
            live: 1,
            max_live,
            queue: VecDeque::new(),
        }
    }

    fn get(&self, coset: usize, column: usize) -> Option<usize> {
        match self.entries[coset * self.columns + column] {
            UNDEFINED => None,
            c => Some(c as usize),
        }
    }

    fn set(&mut self, coset: usize, column: usize, value: Option<usize>) {
        self.entries[coset * self.columns + column] = value.map_or(UNDEFINED, |v| v as u32);
    }

    fn is_live(&self, coset: usize) -> bool {
        self.parent[coset] as usize == coset
    }

    fn define(&mut self, coset: usize, column: usize) -> Result<()> {
        if self.live >= self.max_live {
            return Err(Error::CosetLimitExceeded(self.max_live));
        }
        let new = self.parent.len();
        self.parent.push(new as u32);
        self.entries
            .extend(std::iter::repeat_n(UNDEFINED, self.columns));
        self.set(coset, column, Some(new));
        self.set(new, column ^ 1, Some(coset));
        self.live += 1;
        Ok(())
    }

    fn rep(&mut self, coset: usize) -> usize {
        let mut root = coset;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut c = coset;
        while self.parent[c] as usize != root {
            let next = self.parent[c] as usize;
            self.parent[c] = root as u32;
            c = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize) {
        let ra = self.rep(a);
        let rb = self.rep(b);
        if ra == rb {
            return;
        }
        let (keep, kill) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[kill] = keep as u32;
        self.live -= 1;
        self.queue.push_back(kill);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(dead) = self.queue.pop_front() {
            for col in 0..self.columns {
                let Some(target) = self.get(dead, col) else {
                    continue;
                };
                self.set(target, col ^ 1, None);
                let mu = self.rep(dead);
                let nu = self.rep(target);
                if let Some(e) = self.get(mu, col) {
                    self.merge(nu, e);
                } else if let Some(e) = self.get(nu, col ^ 1) {
                    self.merge(mu, e);
                } else {
                    self.set(mu, col, Some(nu));
                    self.set(nu, col ^ 1, Some(mu));
                }
            }
        }
    }

    /// Traces `word` from `coset` in both directions, defining cosets as
    /// needed, and records the resulting deduction or coincidence.
    fn scan_and_fill(&mut self, coset: usize, word: &[usize]) -> Result<()> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = coset;
        let mut b = coset;
        let mut i = 0usize;
        let mut j = word.len() - 1;
        loop {
            while i <= j {
                match self.get(f, word[i]) {
                    Some(next) => {
                        f = next;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                match self.get(b, word[j] ^ 1) {
                    Some(next) => {
                        b = next;
                        if j == 0 {
                            // the whole word traced backwards
                            self.coincidence(f, b);
                            return Ok(());
                        }
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.set(f, word[i], Some(b));
                self.set(b, word[i] ^ 1, Some(f));
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }
}

/// HLT coset enumeration of the subgroup generated by `subgroup` in the group
/// presented by `presentation`. Relators are scanned in input order and cosets
/// in creation order; the final numbering is the breadth-first standard form.
pub fn todd_coxeter(
    presentation: &Presentation,
    subgroup: &[Word],
    max_cosets: usize,
) -> Result<CosetEnumeration> {
    if max_cosets == 0 {
        return Err(Error::BadParameter("max_cosets must be at least 1".into()));
    }
    if presentation.relators.is_empty() && subgroup.iter().all(Word::is_empty) {
        return Err(Error::EmptyPresentationDegenerate);
    }
    let gens = presentation.generator_count();
    let columns = 2 * gens;
    let to_columns = |w: &Word| -> Vec<usize> { w.letters.iter().map(|l| l.column()).collect() };
    let relators: Vec<Vec<usize>> = presentation.relators.iter().map(to_columns).collect();
    let subgroup: Vec<Vec<usize>> = subgroup.iter().map(to_columns).collect();

    let mut table = CosetTable::new(columns, max_cosets);
    for w in &subgroup {
        table.scan_and_fill(0, w)?;
    }
    let mut coset = 0;
    while coset < table.parent.len() {
        if table.is_live(coset) {
            for r in &relators {
                table.scan_and_fill(coset, r)?;
                if !table.is_live(coset) {
                    break;
                }
            }
            if table.is_live(coset) {
                for col in 0..columns {
                    if table.get(coset, col).is_none() {
                        table.define(coset, col)?;
                    }
                }
            }
        }
        coset += 1;
    }

    // standardize: breadth-first from coset 0, columns in order
    let mut number = vec![UNDEFINED; table.parent.len()];
    let mut order = vec![0usize];
    number[0] = 0;
    let mut k = 0;
    while k < order.len() {
        let c = order[k];
        for col in 0..columns {
            let t = table.get(c, col).expect("complete coset table");
            let t = table.rep(t);
            if number[t] == UNDEFINED {
                number[t] = order.len() as u32;
                order.push(t);
            }
        }
        k += 1;
    }
    let index = order.len();
    if index != table.live {
        return Err(Error::InternalInconsistency(format!(
            "{} live cosets but {} reachable",
            table.live, index
        )));
    }
    let generator_images = (0..gens)
        .map(|g| {
            let images: Vec<usize> = order
                .iter()
                .map(|&c| {
                    let t = table.get(c, 2 * g).expect("complete coset table");
                    number[table.rep(t)] as usize + 1
                })
                .collect();
            Permutation::from_images(&images).map_err(|e| {
                Error::InternalInconsistency(format!(
                    "generator {g} does not act as a bijection: {e}"
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CosetEnumeration {
        generator_images,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn pres(relations: &[&str]) -> Presentation {
        Presentation::parse(&["x", "y"], relations).unwrap()
    }

    #[test]
    fn parse_powers() {
        let w = parse_word("x^4", &names()).unwrap();
        assert_eq!(w, Word::power(0, 4));
        assert_eq!(w.len(), 4);
        let w = parse_word("y^-1*x*y*x", &names()).unwrap();
        assert_eq!(w.to_string_with(&names()), "y^-1*x*y*x");
        let w = parse_word(" x * y * x ^ -2 * y^-2 ", &names()).unwrap();
        assert_eq!(w.to_string_with(&names()), "x*y*x^-2*y^-2");
        assert!(parse_word("x^0", &names()).unwrap().is_empty());
        assert!(parse_word("x*x^-1", &names()).unwrap().is_empty());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_word("z", &names()).unwrap_err(),
            Error::UnknownGenerator("z".into())
        );
        assert!(matches!(
            parse_word("x*", &names()),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_word("x^", &names()),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_word("x y", &names()),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_word("", &names()),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_word("2x", &names()),
            Err(Error::Syntax { position: 0, .. })
        ));
    }

    #[test]
    fn equations_become_relators() {
        let r = parse_relation("x*y = y^2*x^2", &names()).unwrap();
        assert_eq!(r, parse_word("x*y*x^-2*y^-2", &names()).unwrap());
        assert!(parse_relation("x = y = x", &names()).is_err());
    }

    #[test]
    fn cyclic_five() {
        let e = todd_coxeter(&pres(&["x^5", "y"]), &[], 100).unwrap();
        assert_eq!(e.index, 5);
        assert_eq!(e.generator_images[0].order(), 5);
        assert!(e.generator_images[1].is_identity());
    }

    #[test]
    fn order_twenty_group() {
        let p = pres(&["x^4", "y^4", "x*y = y^2*x^2"]);
        let e = todd_coxeter(&p, &[], DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(e.index, 20);
        let g = PermGroup::new(e.generator_images.clone()).unwrap();
        assert_eq!(g.order(), 20);
    }

    #[test]
    fn quaternion_twelve() {
        let p = pres(&["x^3 = y^2", "x^6", "y^-1*x*y*x"]);
        assert_eq!(todd_coxeter(&p, &[], 1000).unwrap().index, 12);
    }

    #[test]
    fn relators_hold_on_cosets() {
        let p = pres(&["x^4", "y^4", "x*y = y^2*x^2"]);
        let e = todd_coxeter(&p, &[], 1000).unwrap();
        for r in p.relators() {
            assert!(r.evaluate(&e.generator_images).is_identity());
        }
    }

    #[test]
    fn subgroup_index() {
        // S3 = <x, y | x^3, y^2, (xy)^2>, subgroup <y> has index 3
        let p = pres(&["x^3", "y^2", "x*y*x*y"]);
        let y = p.parse_word("y").unwrap();
        let e = todd_coxeter(&p, std::slice::from_ref(&y), 100).unwrap();
        assert_eq!(e.index, 3);
        assert_eq!(y.evaluate(&e.generator_images).image(1), 1);
    }

    #[test]
    fn infinite_or_capped() {
        assert_eq!(
            todd_coxeter(&pres(&[]), &[], 100).unwrap_err(),
            Error::EmptyPresentationDegenerate
        );
        assert_eq!(
            todd_coxeter(&pres(&["x^5"]), &[], 50).unwrap_err(),
            Error::CosetLimitExceeded(50)
        );
        let p = pres(&["x^4", "y^4", "x*y = y^2*x^2"]);
        assert_eq!(
            todd_coxeter(&p, &[], 10).unwrap_err(),
            Error::CosetLimitExceeded(10)
        );
    }

    #[test]
    fn deterministic_numbering() {
        let p = pres(&["x^4", "y^4", "x*y = y^2*x^2"]);
        let a = todd_coxeter(&p, &[], 1000).unwrap();
        let b = todd_coxeter(&p, &[], 1000).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn c6_swap_augmentation() {
        let p = pres(&["x^6", "x^4*y^-1"]);
        let x = Word::generator(0);
        let y = Word::generator(1);
        let aug = p.augment_with_assignment((&y, &x)).unwrap();
        let shown: Vec<String> = aug.relators().iter().map(|r| aug.display_word(r)).collect();
        assert_eq!(shown, ["x^6", "x^4*y^-1", "y^6", "y^4*x^-1"]);
        assert_eq!(todd_coxeter(&aug, &[], 100).unwrap().index, 3);
        assert_eq!(p.augment_with_assignment((&x, &y)).unwrap(), p);
        assert_eq!(aug.augment_with_assignment((&y, &x)).unwrap(), aug);
    }

    #[test]
    fn order_twenty_beta_augmentation() {
        let p = pres(&["x^4", "y^4", "x*y = y^2*x^2"]);
        let u = p.parse_word("y^-1").unwrap();
        let v = p.parse_word("x^-1").unwrap();
        let aug = p.augment_with_assignment((&u, &v)).unwrap();
        assert_eq!(todd_coxeter(&aug, &[], 1000).unwrap().index, 20);
    }

    #[test]
    fn augmentation_needs_two_generators() {
        let p = Presentation::parse(&["x"], &["x^3"]).unwrap();
        let w = Word::generator(0);
        assert_eq!(
            p.augment_with_assignment((&w, &w)).unwrap_err(),
            Error::NotTwoGenerator(1)
        );
    }
}
