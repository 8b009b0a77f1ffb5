//! Line-oriented presentation format.
//!
//! ```text
//! field F 101
//! vertex x
//! vertex y
//! arrow d x x
//! arrow a x y
//! rel d*d
//! rel a*d - 2*r*a
//! ```
//!
//! Terms are `*`-joined arrow labels, composed right to left. `#` starts a
//! comment.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{compute_basis, AlgebraBasis, Path, Quiver, Relation};
use crate::error::{Error, Result};
use crate::field::{Field, FieldConfig, PrimeField};

pub type RawRelation = Vec<(BigRational, Path)>;

#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub field: Option<FieldConfig>,
    pub quiver: Quiver,
    pub relations: Vec<RawRelation>,
}

impl Presentation {
    /// Maps the rational relation coefficients into `field`.
    pub fn relations_in<F: Field>(&self, field: &F) -> Result<Vec<Relation<F::Elem>>> {
        self.relations
            .iter()
            .enumerate()
            .map(|(index, r)| {
                r.iter()
                    .map(|(c, p)| {
                        field
                            .from_ratio(c.numer(), c.denom())
                            .map(|x| (x, p.clone()))
                            .ok_or_else(|| Error::Relation {
                                index,
                                message: format!("coefficient {c} is undefined in {}", field.config()),
                            })
                    })
                    .collect()
            })
            .collect()
    }

    pub fn build<F: Field>(&self, field: &F, cap: usize) -> Result<AlgebraBasis<F>> {
        compute_basis(field, self.quiver.clone(), self.relations_in(field)?, cap)
    }

    /// Renders the presentation back in the text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self.field {
            Some(FieldConfig::Prime { p }) => out.push_str(&format!("field F {p}\n")),
            Some(FieldConfig::Rational) => out.push_str("field Q\n"),
            None => {}
        }
        for v in &self.quiver.vertices {
            out.push_str(&format!("vertex {v}\n"));
        }
        for a in &self.quiver.arrows {
            out.push_str(&format!(
                "arrow {} {} {}\n",
                a.label, self.quiver.vertices[a.source], self.quiver.vertices[a.target]
            ));
        }
        for r in &self.relations {
            out.push_str("rel ");
            for (i, (c, p)) in r.iter().enumerate() {
                let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
                if i == 0 {
                    if sign == "-" {
                        out.push('-');
                    }
                } else {
                    out.push_str(&format!(" {sign} "));
                }
                if !mag.is_one() {
                    out.push_str(&format!("{mag}*"));
                }
                out.push_str(&self.quiver.format_path(p));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Label(String),
    Number(BigRational),
    Star,
    Plus,
    Minus,
    Equals,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

fn is_label_char(c: char) -> bool {
    !c.is_whitespace() && !matches!(c, '*' | '+' | '-' | '=' | '#')
}

fn tokenize(text: &str, line: usize, offset: usize) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = offset + i + 1;
        match c {
            _ if c.is_whitespace() => i += 1,
            '*' => {
                out.push((col, Token::Star));
                i += 1;
            }
            '+' => {
                out.push((col, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((col, Token::Minus));
                i += 1;
            }
            '=' => {
                out.push((col, Token::Equals));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let (num, den) = s.split_once('/').unwrap_or((&s, "1"));
                let num: BigInt = num.parse().map_err(|_| syntax(line, col, format!("bad number `{s}`")))?;
                let den: BigInt = den.parse().map_err(|_| syntax(line, col, format!("bad number `{s}`")))?;
                if den.is_zero() {
                    return Err(syntax(line, col, "zero denominator"));
                }
                out.push((col, Token::Number(BigRational::new(num, den))));
            }
            _ => {
                let start = i;
                while i < chars.len() && is_label_char(chars[i]) {
                    i += 1;
                }
                out.push((col, Token::Label(chars[start..i].iter().collect())));
            }
        }
    }
    Ok(out)
}

fn parse_relation(
    quiver: &Quiver,
    tokens: &[(usize, Token)],
    line: usize,
    end_col: usize,
) -> Result<RawRelation> {
    let mut terms: RawRelation = Vec::new();
    let mut pos = 0;
    let mut side = BigRational::one();
    let mut expect_term = true;
    let mut sign = BigRational::one();
    while pos < tokens.len() {
        let (col, tok) = &tokens[pos];
        match tok {
            Token::Plus => {
                pos += 1;
                expect_term = true;
            }
            Token::Minus => {
                sign = -sign;
                pos += 1;
                expect_term = true;
            }
            Token::Equals if !expect_term => {
                if side.is_negative() {
                    return Err(syntax(line, *col, "second `=`"));
                }
                side = -side;
                pos += 1;
                expect_term = true;
            }
            Token::Number(_) | Token::Label(_) if expect_term => {
                let mut coef = BigRational::one();
                if let Token::Number(n) = tok {
                    coef = n.clone();
                    pos += 1;
                    if matches!(tokens.get(pos), Some((_, Token::Star))) {
                        pos += 1;
                    }
                }
                let mut arrows = Vec::new();
                loop {
                    match tokens.get(pos) {
                        Some((c, Token::Label(l))) => {
                            let a = quiver
                                .arrow_index(l)
                                .ok_or_else(|| syntax(line, *c, format!("unknown arrow `{l}`")))?;
                            arrows.push(a);
                            pos += 1;
                        }
                        Some((c, _)) => return Err(syntax(line, *c, "expected an arrow label")),
                        None => return Err(syntax(line, end_col, "expected an arrow label")),
                    }
                    if matches!(tokens.get(pos), Some((_, Token::Star))) {
                        pos += 1;
                    } else {
                        break;
                    }
                }
                let path = quiver
                    .path(&arrows)
                    .ok_or_else(|| syntax(line, *col, "arrows in term are not composable"))?;
                terms.push((coef * &sign * &side, path));
                sign = BigRational::one();
                expect_term = false;
            }
            _ => return Err(syntax(line, *col, "unexpected token")),
        }
    }
    if expect_term {
        return Err(syntax(line, end_col, "relation ends without a term"));
    }
    if let Some((_, first)) = terms.first() {
        if terms.iter().any(|(_, p)| p.source != first.source || p.target != first.target) {
            return Err(syntax(line, 1, "terms of the relation are not parallel"));
        }
    }
    Ok(terms)
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut field = None;
    let mut quiver = Quiver::default();
    let mut relations = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed_start = content.len() - content.trim_start().len();
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest_offset = trimmed_start + keyword.chars().count() + 1;
        let words: Vec<&str> = rest.split_whitespace().collect();
        let end_col = trimmed_start + content.chars().count() + 1;
        match keyword {
            "field" => {
                let spec = words.join(" ");
                let cfg = match words.as_slice() {
                    ["Q"] | ["q"] => FieldConfig::Rational,
                    ["F", p] | ["f", p] => {
                        let p: u64 = p.parse().map_err(|_| syntax(line, rest_offset + 1, "expected a prime"))?;
                        PrimeField::new(p).map_err(|e| syntax(line, rest_offset + 1, e.to_string()))?;
                        FieldConfig::Prime { p }
                    }
                    _ => spec.parse().map_err(|e: Error| syntax(line, rest_offset + 1, e.to_string()))?,
                };
                field = Some(cfg);
            }
            "vertex" => {
                if words.is_empty() {
                    return Err(syntax(line, end_col, "expected a vertex label"));
                }
                for w in words {
                    if quiver.vertex_index(w).is_some() || quiver.arrow_index(w).is_some() {
                        return Err(Error::DuplicateLabel(w.to_string()));
                    }
                    quiver.vertices.push(w.to_string());
                }
            }
            "arrow" => {
                let [label, s, t] = words.as_slice() else {
                    return Err(syntax(line, rest_offset + 1, "expected `arrow <label> <source> <target>`"));
                };
                if quiver.arrow_index(label).is_some() || quiver.vertex_index(label).is_some() {
                    return Err(Error::DuplicateLabel(label.to_string()));
                }
                if !label.chars().all(is_label_char) || label.starts_with(|c: char| c.is_ascii_digit()) {
                    return Err(syntax(line, rest_offset + 1, format!("invalid arrow label `{label}`")));
                }
                let s = quiver.vertex_index(s).ok_or_else(|| Error::UnknownLabel(s.to_string()))?;
                let t = quiver.vertex_index(t).ok_or_else(|| Error::UnknownLabel(t.to_string()))?;
                quiver.add_arrow(label, s, t);
            }
            "rel" => {
                let tokens = tokenize(rest, line, rest_offset)?;
                relations.push(parse_relation(&quiver, &tokens, line, end_col)?);
            }
            other => return Err(syntax(line, trimmed_start + 1, format!("unknown keyword `{other}`"))),
        }
    }
    if quiver.vertices.is_empty() {
        return Err(syntax(1, 1, "no vertices declared"));
    }
    Ok(Presentation { field, quiver, relations })
}

/// Parses a presentation and computes its basis over `field` (the file's own
/// `field` line is ignored here; callers choose the field).
pub fn parse_algebra<F: Field>(text: &str, field: &F, cap: usize) -> Result<AlgebraBasis<F>> {
    parse_presentation(text)?.build(field, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example_file() {
        let p = parse_presentation(
            "field F 101\nvertex x\nvertex y\narrow d x x\narrow a x y\narrow r y y\n# comment\nrel d*d\nrel a*d - 2*r*a\n",
        )
        .unwrap();
        assert_eq!(p.field, Some(FieldConfig::Prime { p: 101 }));
        assert_eq!(p.quiver.arrows.len(), 3);
        assert_eq!(p.relations[1].len(), 2);
        assert_eq!(p.relations[1][1].0, BigRational::from_integer(BigInt::from(-2)));
        let again = parse_presentation(&p.to_text()).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn equation_form() {
        let p = parse_presentation("vertex x\nvertex y\narrow d x x\narrow a x y\narrow r y y\nrel a*d = r*a\n").unwrap();
        let r = &p.relations[0];
        assert_eq!(r[0].0, BigRational::one());
        assert_eq!(r[1].0, -BigRational::one());
    }

    #[test]
    fn reports_positions() {
        let err = parse_presentation("vertex x\narrow d x x\nrel d*q\n").unwrap_err();
        assert_eq!(err, Error::Syntax { line: 3, column: 7, message: "unknown arrow `q`".into() });
        let err = parse_presentation("vertex x\nvertex y\narrow a x y\narrow b y x\nrel a*a\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 5, .. }));
        assert!(matches!(parse_presentation("vertex x\nfoo\n"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse_presentation("vertex x\narrow d x z\n"), Err(Error::UnknownLabel(_))));
    }
}
