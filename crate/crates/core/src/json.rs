//! Wire formats for elements: `{ "basis": "G", "terms": [{"coeff": "1", "perm": [4,1,3,2]}] }`
//! and the compact text form `2*S[4132] - 1/2*S[21]`.

use serde::{Deserialize, Serialize};

use crate::bases::{expand_comb, to_basis, BasisTag};
use crate::error::{Error, Result};
use crate::fqsym::FqsymElem;
use crate::linear::{format_rational, parse_rational, rat, LinComb, Rational};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub perm: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub basis: String,
    pub terms: Vec<TermJson>,
}

/// A linear combination of basis elements of one named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedElem {
    pub tag: BasisTag,
    pub comb: LinComb<Permutation>,
}

impl TaggedElem {
    pub fn new(tag: BasisTag, comb: LinComb<Permutation>) -> Self {
        TaggedElem { tag, comb }
    }

    pub fn single(tag: BasisTag, sigma: Permutation) -> Self {
        TaggedElem::new(tag, LinComb::term(sigma))
    }

    /// The element itself, expanded on `G` or `F`.
    pub fn to_fqsym(&self) -> Result<FqsymElem> {
        expand_comb(self.tag, &self.comb)
    }

    pub fn from_fqsym(x: &FqsymElem, tag: BasisTag) -> Result<Self> {
        Ok(TaggedElem::new(tag, to_basis(x, tag)?))
    }

    /// Largest degree among the terms.
    pub fn max_size(&self) -> usize {
        self.comb.labels().map(Permutation::size).max().unwrap_or(0)
    }

    /// Terms in lexicographic label order.
    pub fn to_json(&self) -> ElementJson {
        ElementJson {
            basis: self.tag.to_string(),
            terms: self
                .comb
                .iter()
                .map(|(s, c)| TermJson {
                    coeff: format_rational(c),
                    perm: s.to_u32s(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &ElementJson) -> Result<Self> {
        let tag: BasisTag = json.basis.parse()?;
        let mut comb = LinComb::zero();
        for t in &json.terms {
            comb.add_term(Permutation::from_u32s(&t.perm)?, parse_rational(&t.coeff)?);
        }
        Ok(TaggedElem::new(tag, comb))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("element JSON is serializable")
    }

    /// Accepts the JSON schema or the text form.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('{') {
            let json: ElementJson = serde_json::from_str(t)?;
            return TaggedElem::from_json(&json);
        }
        parse_text(t)
    }

    /// Text form; the zero element renders as `0*TAG[]` so it keeps its basis.
    pub fn to_text(&self) -> String {
        if self.comb.is_zero() {
            return format!("0*{}[]", self.tag);
        }
        let mut out = String::new();
        for (k, (s, c)) in self.comb.iter().enumerate() {
            let neg = c < &rat(0);
            let abs: Rational = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if abs != rat(1) {
                out.push_str(&format_rational(&abs));
                out.push('*');
            }
            out.push_str(&format!(
                "{}[{}]",
                self.tag,
                s.to_u32s().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            ));
        }
        out
    }
}

/// `term (± term)*` with `term = [coeff '*'] TAG '[' perm ']'`; all terms share one tag.
fn parse_text(s: &str) -> Result<TaggedElem> {
    let err = |r: &str| Error::parse("element", s, r);
    if s == "0" {
        return Err(err("a bare zero carries no basis"));
    }
    let mut tag: Option<BasisTag> = None;
    let mut comb = LinComb::zero();
    let mut rest = s.trim();
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = rat(1);
        if let Some(r) = rest.strip_prefix('-') {
            sign = rat(-1);
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            if first {
                return Err(err("leading '+'"));
            }
            rest = r.trim_start();
        } else if !first {
            return Err(err("expected '+' or '-' between terms"));
        }
        let close = rest.find(']').ok_or_else(|| err("missing ']'"))?;
        let (term, tail) = rest.split_at(close + 1);
        rest = tail.trim_start();
        first = false;
        let open = term.find('[').ok_or_else(|| err("missing '['"))?;
        let head = term[..open].trim();
        let perm_text = &term[open + 1..term.len() - 1];
        let (coeff, name) = match head.split_once('*') {
            Some((c, n)) => (parse_rational(c)?, n.trim()),
            None => (rat(1), head),
        };
        let t: BasisTag = name.parse()?;
        if tag.is_some_and(|prev| prev != t) {
            return Err(err("terms use different bases"));
        }
        tag = Some(t);
        let sigma: Permutation = if perm_text.trim().is_empty() {
            Permutation::empty()
        } else {
            perm_text.parse()?
        };
        comb.add_term(sigma, sign * coeff);
    }
    let tag = tag.ok_or_else(|| err("no terms"))?;
    Ok(TaggedElem::new(tag, comb))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let x = TaggedElem::single(BasisTag::G, "4132".parse().unwrap());
        assert_eq!(
            x.to_json_string(),
            r#"{"basis":"G","terms":[{"coeff":"1","perm":[4,1,3,2]}]}"#
        );
        assert_eq!(TaggedElem::parse(&x.to_json_string()).unwrap(), x);
    }

    #[test]
    fn text_round_trip() {
        let x = TaggedElem::parse("2*S[4132] - 1/2*S[21] + S[]").unwrap();
        assert_eq!(x.tag, BasisTag::S);
        assert_eq!(x.comb.len(), 3);
        assert_eq!(TaggedElem::parse(&x.to_text()).unwrap(), x);
        assert_eq!(TaggedElem::parse("-Ghat[1,2]").unwrap().to_text(), "-Ghat[1,2]");
        assert_eq!(TaggedElem::parse("lambda[21]").unwrap().tag, BasisTag::Lambda);
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "",
            "0",
            "G[12",
            "X[12]",
            "G[12] S[21]",
            "G[12] + S[21]",
            "G[113]",
            "+G[1]",
        ] {
            assert!(TaggedElem::parse(bad).is_err(), "{bad}");
        }
        assert!(TaggedElem::parse(r#"{"basis":"G","terms":[{"coeff":"x","perm":[1]}]}"#).is_err());
    }

    #[test]
    fn every_tag_round_trips_through_fqsym() {
        for tag in BasisTag::ALL {
            let x = TaggedElem::parse(&format!("{tag}[312] - 3*{tag}[21]")).unwrap();
            let back = TaggedElem::from_fqsym(&x.to_fqsym().unwrap(), tag).unwrap();
            assert_eq!(back, x, "{tag}");
            assert_eq!(TaggedElem::from_json(&x.to_json()).unwrap(), x);
        }
    }
}
