//! Parsers for the text syntax: scalars, words, free-algebra elements, KLR
//! elements, and the Cartan configuration file. Every printer in the crate
//! emits strings this module parses back to structurally equal values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cartan::CartanMatrix;
use crate::error::{CartanError, ParseError};
use crate::klr::{KlrBasisElement, KlrElement, KlrParams, KlrScalar};
use crate::scalar::RatScalar;
use crate::word::{AlgElement, ZWord};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Word(Vec<(i64, String)>),
}

struct Lexer<'s> {
    src: &'s [u8],
    pos: usize,
}

impl<'s> Lexer<'s> {
    fn new(src: &'s str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next_token(&mut self) -> Result<Option<Token>, ParseError> {
        self.skip_ws();
        let Some(&b) = self.src.get(self.pos) else {
            return Ok(None);
        };
        let tok = match b {
            b'+' => {
                self.pos += 1;
                Token::Plus
            }
            b'-' => {
                self.pos += 1;
                Token::Minus
            }
            b'*' => {
                self.pos += 1;
                Token::Star
            }
            b'/' => {
                self.pos += 1;
                Token::Slash
            }
            b'^' => {
                self.pos += 1;
                Token::Caret
            }
            b'(' => {
                self.pos += 1;
                Token::LParen
            }
            b')' => {
                self.pos += 1;
                Token::RParen
            }
            b'q' => {
                self.pos += 1;
                Token::Q
            }
            b'[' => Token::Word(self.lex_word()?),
            b'0'..=b'9' => Token::Int(self.lex_int()?),
            other => return Err(self.err(format!("unexpected character `{}`", other as char))),
        };
        Ok(Some(tok))
    }

    fn lex_int(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<BigInt>()
            .map_err(|_| ParseError::new(start, "invalid integer"))
    }

    fn lex_signed_int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let mut neg = false;
        if self.src.get(self.pos) == Some(&b'-') {
            neg = true;
            self.pos += 1;
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: i64 = text
            .parse()
            .map_err(|_| ParseError::new(start, "integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    /// `[level:label,...]`
    fn lex_word(&mut self) -> Result<Vec<(i64, String)>, ParseError> {
        debug_assert_eq!(self.src[self.pos], b'[');
        self.pos += 1;
        let mut letters = Vec::new();
        self.skip_ws();
        if self.src.get(self.pos) == Some(&b']') {
            self.pos += 1;
            return Ok(letters);
        }
        loop {
            let level = self.lex_signed_int()?;
            self.skip_ws();
            if self.src.get(self.pos) != Some(&b':') {
                return Err(self.err("expected `:` in word letter"));
            }
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self
                .src
                .get(self.pos)
                .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
            {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected a vertex label"));
            }
            let label = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .to_string();
            letters.push((level, label));
            self.skip_ws();
            match self.src.get(self.pos) {
                Some(b',') => {
                    self.pos += 1;
                }
                Some(b']') => {
                    self.pos += 1;
                    return Ok(letters);
                }
                _ => return Err(self.err("expected `,` or `]` in word")),
            }
        }
    }
}

struct Parser<'s> {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
    cartan: &'s CartanMatrix,
}

impl<'s> Parser<'s> {
    fn new(src: &str, cartan: &'s CartanMatrix) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(src);
        let mut tokens = Vec::new();
        loop {
            lexer.skip_ws();
            let pos = lexer.pos;
            match lexer.next_token()? {
                None => break,
                Some(t) => tokens.push((pos, t)),
            }
        }
        Ok(Parser {
            tokens,
            at: 0,
            end: src.len(),
            cartan,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.at)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, t: &Token, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(t) {
            self.at += 1;
            Ok(())
        } else {
            Err(ParseError::new(self.pos(), format!("expected {}", what)))
        }
    }

    // scalar := term (('+'|'-') term)*
    fn scalar_expr(&mut self) -> Result<RatScalar, ParseError> {
        let mut acc = self.scalar_term(false)?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.at += 1;
                    let t = self.scalar_term(false)?;
                    acc = &acc + &t;
                }
                Some(Token::Minus) => {
                    self.at += 1;
                    let t = self.scalar_term(false)?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor (('*'|'/') factor)*; with `stop_at_word` the chain stops
    // before a `*` that is followed by a word token
    fn scalar_term(&mut self, stop_at_word: bool) -> Result<RatScalar, ParseError> {
        let mut acc = self.scalar_factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    if stop_at_word
                        && matches!(self.tokens.get(self.at + 1), Some((_, Token::Word(_))))
                    {
                        return Ok(acc);
                    }
                    self.at += 1;
                    let f = self.scalar_factor()?;
                    acc = &acc * &f;
                }
                Some(Token::Slash) => {
                    self.at += 1;
                    let pos = self.pos();
                    let f = self.scalar_factor()?;
                    acc = acc
                        .div(&f)
                        .map_err(|_| ParseError::new(pos, "division by zero"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // factor := base ('^' signed_int)?
    fn scalar_factor(&mut self) -> Result<RatScalar, ParseError> {
        let base = self.scalar_base()?;
        if self.peek() == Some(&Token::Caret) {
            self.at += 1;
            let exp = self.signed_int()?;
            let pos = self.pos();
            return base
                .pow(exp)
                .map_err(|_| ParseError::new(pos, "zero to a negative power"));
        }
        Ok(base)
    }

    fn scalar_base(&mut self) -> Result<RatScalar, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Token::Int(n)) => Ok(RatScalar::from_int(n)),
            Some(Token::Q) => Ok(RatScalar::q_power(1)),
            Some(Token::Minus) => {
                let f = self.scalar_factor()?;
                Ok(-&f)
            }
            Some(Token::LParen) => {
                let e = self.scalar_expr()?;
                self.expect(&Token::RParen, "`)`")?;
                Ok(e)
            }
            _ => Err(ParseError::new(pos, "expected a scalar")),
        }
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let pos = self.pos();
        let neg = if self.peek() == Some(&Token::Minus) {
            self.at += 1;
            true
        } else {
            false
        };
        match self.bump() {
            Some(Token::Int(n)) => {
                let v = i64::try_from(&n)
                    .map_err(|_| ParseError::new(pos, "exponent out of range"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(ParseError::new(pos, "expected an integer exponent")),
        }
    }

    fn word(&mut self, letters: &[(i64, String)]) -> Result<ZWord, ParseError> {
        let pos = self.pos();
        let mut out = Vec::with_capacity(letters.len());
        for (level, label) in letters {
            let vertex = self
                .cartan
                .index_of(label)
                .map_err(|e| ParseError::new(pos, e.to_string()))?;
            out.push((*level, vertex));
        }
        Ok(ZWord::from_pairs(&out))
    }

    // element := eterm (('+'|'-') eterm)*
    // eterm := [scalar-term '*'] word | scalar-term
    fn element(&mut self) -> Result<AlgElement, ParseError> {
        let mut acc = AlgElement::zero();
        let mut negate = false;
        loop {
            let (word, coeff) = self.element_term()?;
            let coeff = if negate { -&coeff } else { coeff };
            acc.add_term(word, coeff);
            match self.peek() {
                Some(Token::Plus) => {
                    negate = false;
                    self.at += 1;
                }
                Some(Token::Minus) => {
                    negate = true;
                    self.at += 1;
                }
                None => return Ok(acc),
                _ => {
                    return Err(ParseError::new(self.pos(), "expected `+`, `-`, or end"));
                }
            }
        }
    }

    fn element_term(&mut self) -> Result<(ZWord, RatScalar), ParseError> {
        if let Some(Token::Word(letters)) = self.peek().cloned() {
            self.at += 1;
            let w = self.word(&letters)?;
            return Ok((w, RatScalar::one()));
        }
        let coeff = self.scalar_term(true)?;
        if self.peek() == Some(&Token::Star) {
            self.at += 1;
        }
        match self.peek().cloned() {
            Some(Token::Word(letters)) => {
                self.at += 1;
                let w = self.word(&letters)?;
                Ok((w, coeff))
            }
            // a bare scalar is a multiple of the empty word
            _ => Ok((ZWord::empty(), coeff)),
        }
    }
}

/// Parse a standalone scalar such as `q^2/(1-q^2)^2`.
pub fn parse_scalar(src: &str, cartan: &CartanMatrix) -> Result<RatScalar, ParseError> {
    let mut p = Parser::new(src, cartan)?;
    let s = p.scalar_expr()?;
    if p.peek().is_some() {
        return Err(ParseError::new(p.pos(), "trailing input after scalar"));
    }
    Ok(s)
}

/// Parse a word such as `[0:i,8:j,1:i,2:i]`.
pub fn parse_word(src: &str, cartan: &CartanMatrix) -> Result<ZWord, ParseError> {
    let mut p = Parser::new(src, cartan)?;
    match p.bump() {
        Some(Token::Word(letters)) => {
            let w = p.word(&letters)?;
            if p.peek().is_some() {
                return Err(ParseError::new(p.pos(), "trailing input after word"));
            }
            Ok(w)
        }
        _ => Err(ParseError::new(0, "expected a word like [0:i,1:j]")),
    }
}

/// Parse an element such as `q^-2*[0:i,1:i] + (1/(1-q^2))*[]`.
pub fn parse_element(src: &str, cartan: &CartanMatrix) -> Result<AlgElement, ParseError> {
    let mut p = Parser::new(src, cartan)?;
    p.element()
}

/// Parse a comma-separated vertex sequence such as `i,j,i`.
pub fn parse_seq(src: &str, cartan: &CartanMatrix) -> Result<Vec<usize>, ParseError> {
    let src = src.trim();
    if src.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in src.split(',') {
        let label = piece.trim();
        let vertex = cartan
            .index_of(label)
            .map_err(|e| ParseError::new(offset, e.to_string()))?;
        out.push(vertex);
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Parse a KLR element such as `x{1,0}*t{2,1}*e{i,i} + 2*e{i,i}`.
pub fn parse_klr_element(src: &str, cartan: &CartanMatrix) -> Result<KlrElement, ParseError> {
    let mut out = KlrElement::zero();
    let mut rest = src.trim();
    let mut negate = false;
    let mut offset = 0usize;
    if rest.starts_with('-') {
        negate = true;
        rest = rest[1..].trim_start();
        offset += 1;
    }
    loop {
        let (term, coeff, used) = parse_klr_term(rest, offset, cartan)?;
        out.add_term(term, if negate { -coeff } else { coeff });
        rest = rest[used..].trim_start();
        offset += used;
        if rest.is_empty() {
            return Ok(out);
        }
        if let Some(r) = rest.strip_prefix('+') {
            negate = false;
            rest = r.trim_start();
            offset += 1;
        } else if let Some(r) = rest.strip_prefix('-') {
            negate = true;
            rest = r.trim_start();
            offset += 1;
        } else {
            return Err(ParseError::new(offset, "expected `+` or `-` between terms"));
        }
    }
}

fn parse_klr_term(
    src: &str,
    base_offset: usize,
    cartan: &CartanMatrix,
) -> Result<(KlrBasisElement, KlrScalar, usize), ParseError> {
    let mut coeff = KlrScalar::one();
    let mut dots: Option<Vec<u32>> = None;
    let mut perm: Option<Vec<usize>> = None;
    let mut at = 0usize;
    let bytes = src.as_bytes();
    // optional leading rational coefficient
    if bytes.first().is_some_and(|b| b.is_ascii_digit()) {
        let start = at;
        while at < bytes.len() && bytes[at].is_ascii_digit() {
            at += 1;
        }
        let numer: BigInt = src[start..at].parse().unwrap();
        let mut denom = BigInt::one();
        if bytes.get(at) == Some(&b'/') {
            at += 1;
            let dstart = at;
            while at < bytes.len() && bytes[at].is_ascii_digit() {
                at += 1;
            }
            if dstart == at {
                return Err(ParseError::new(base_offset + at, "expected a denominator"));
            }
            denom = src[dstart..at].parse().unwrap();
            if denom.is_zero() {
                return Err(ParseError::new(base_offset + dstart, "zero denominator"));
            }
        }
        coeff = BigRational::new(numer, denom);
        if bytes.get(at) != Some(&b'*') {
            return Err(ParseError::new(
                base_offset + at,
                "expected `*` after the coefficient",
            ));
        }
        at += 1;
    }
    loop {
        match bytes.get(at) {
            Some(b'x') => {
                let (list, used) = parse_brace_list(&src[at + 1..], base_offset + at + 1)?;
                let parsed: Result<Vec<u32>, _> = list
                    .iter()
                    .map(|s| {
                        s.parse::<u32>()
                            .map_err(|_| ParseError::new(base_offset + at, "bad dot exponent"))
                    })
                    .collect();
                dots = Some(parsed?);
                at += 1 + used;
            }
            Some(b't') => {
                let (list, used) = parse_brace_list(&src[at + 1..], base_offset + at + 1)?;
                let parsed: Result<Vec<usize>, _> = list
                    .iter()
                    .map(|s| {
                        s.parse::<usize>()
                            .map_err(|_| ParseError::new(base_offset + at, "bad permutation entry"))
                    })
                    .collect();
                let one_based = parsed?;
                if one_based.contains(&0) {
                    return Err(ParseError::new(
                        base_offset + at,
                        "permutation entries are 1-based",
                    ));
                }
                perm = Some(one_based.iter().map(|&v| v - 1).collect());
                at += 1 + used;
            }
            Some(b'e') => {
                let (list, used) = parse_brace_list(&src[at + 1..], base_offset + at + 1)?;
                at += 1 + used;
                let mut idem = Vec::with_capacity(list.len());
                for label in &list {
                    let v = cartan
                        .index_of(label)
                        .map_err(|e| ParseError::new(base_offset + at, e.to_string()))?;
                    idem.push(v);
                }
                let n = idem.len();
                let perm = perm.unwrap_or_else(|| (0..n).collect());
                let dots = dots.unwrap_or_else(|| vec![0; n]);
                if perm.len() != n || dots.len() != n {
                    return Err(ParseError::new(
                        base_offset + at,
                        "x, t, and e lists must have equal lengths",
                    ));
                }
                {
                    let mut check = perm.clone();
                    check.sort_unstable();
                    if check != (0..n).collect::<Vec<_>>() {
                        return Err(ParseError::new(
                            base_offset + at,
                            "t{...} is not a permutation",
                        ));
                    }
                }
                return Ok((KlrBasisElement { idem, perm, dots }, coeff, at));
            }
            _ => {
                return Err(ParseError::new(
                    base_offset + at,
                    "expected `x{..}`, `t{..}`, or `e{..}`",
                ))
            }
        }
        if bytes.get(at) == Some(&b'*') {
            at += 1;
        } else {
            return Err(ParseError::new(base_offset + at, "expected `*`"));
        }
    }
}

fn parse_brace_list(src: &str, offset: usize) -> Result<(Vec<String>, usize), ParseError> {
    let bytes = src.as_bytes();
    if bytes.first() != Some(&b'{') {
        return Err(ParseError::new(offset, "expected `{`"));
    }
    let close = src
        .find('}')
        .ok_or_else(|| ParseError::new(offset, "unterminated `{`"))?;
    let inner = &src[1..close];
    let list = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner.split(',').map(|s| s.trim().to_string()).collect()
    };
    Ok((list, close + 1))
}

/// Parse the Cartan configuration file: `labels`, `row` lines, `symmetrizers`,
/// plus optional `klr_t i j value` and `klr_s i j p q value` overrides.
pub fn parse_cartan_config(src: &str) -> Result<(CartanMatrix, KlrParams), CartanError> {
    let mut labels: Vec<String> = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut syms: Vec<i64> = Vec::new();
    let mut t_entries: Vec<(String, String, KlrScalar)> = Vec::new();
    let mut s_entries: Vec<(String, String, u32, u32, KlrScalar)> = Vec::new();
    for line in src.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let keyword = parts.next().unwrap();
        let rest: Vec<&str> = parts.collect();
        match keyword {
            "labels" => labels = rest.iter().map(|s| s.to_string()).collect(),
            "row" => {
                let row: Result<Vec<i64>, _> = rest.iter().map(|s| s.parse()).collect();
                rows.push(row.map_err(|_| CartanError::Config(line.to_string()))?);
            }
            "symmetrizers" => {
                let s: Result<Vec<i64>, _> = rest.iter().map(|s| s.parse()).collect();
                syms = s.map_err(|_| CartanError::Config(line.to_string()))?;
            }
            "klr_t" if rest.len() == 3 => {
                let v = parse_rational(rest[2])
                    .ok_or_else(|| CartanError::Config(line.to_string()))?;
                t_entries.push((rest[0].to_string(), rest[1].to_string(), v));
            }
            "klr_s" if rest.len() == 5 => {
                let p: u32 = rest[2]
                    .parse()
                    .map_err(|_| CartanError::Config(line.to_string()))?;
                let q: u32 = rest[3]
                    .parse()
                    .map_err(|_| CartanError::Config(line.to_string()))?;
                let v = parse_rational(rest[4])
                    .ok_or_else(|| CartanError::Config(line.to_string()))?;
                s_entries.push((rest[0].to_string(), rest[1].to_string(), p, q, v));
            }
            other => {
                return Err(CartanError::Config(format!(
                    "unrecognized keyword `{}`",
                    other
                )))
            }
        }
    }
    let cartan = CartanMatrix::new(labels, rows, syms)?;
    let mut params = KlrParams::default_for(&cartan);
    for (li, lj, v) in t_entries {
        let i = cartan.index_of(&li)?;
        let j = cartan.index_of(&lj)?;
        params.t.insert((i, j), v);
    }
    for (li, lj, p, q, v) in s_entries {
        let i = cartan.index_of(&li)?;
        let j = cartan.index_of(&lj)?;
        params.s.insert((i, j, p, q), v.clone());
        params.s.insert((j, i, q, p), v);
    }
    Ok((cartan, params))
}

fn parse_rational(s: &str) -> Option<KlrScalar> {
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{a2, sl2};
    use crate::scalar::{print_scalar, print_scalar_coeff};
    use crate::word::{print_element, print_word};

    #[test]
    fn scalar_round_trip() {
        let c = sl2();
        let f = RatScalar::one_over_one_minus_q2d(1);
        let cases = vec![
            RatScalar::zero(),
            RatScalar::one(),
            RatScalar::q_power(-3),
            f.clone(),
            &RatScalar::q_power(2) * &f.pow(2).unwrap(),
            &(&RatScalar::from_int(2) + &RatScalar::q_power(-2)) * &f.pow(3).unwrap(),
            -&f,
        ];
        for s in cases {
            let printed = print_scalar(&s);
            let parsed = parse_scalar(&printed, &c).unwrap();
            assert_eq!(parsed, s, "round trip failed for `{}`", printed);
            let coeff = print_scalar_coeff(&s);
            assert_eq!(parse_scalar(&coeff, &c).unwrap(), s);
        }
    }

    #[test]
    fn word_round_trip() {
        let c = a2();
        let w = parse_word("[0:i,8:j,1:i,2:i]", &c).unwrap();
        assert_eq!(print_word(&w, &c), "[0:i,8:j,1:i,2:i]");
        assert_eq!(parse_word("[]", &c).unwrap(), ZWord::empty());
        assert!(parse_word("[0:z]", &c).is_err());
        assert!(parse_word("[0 i]", &c).is_err());
        // negative levels
        let w = parse_word("[-2:j]", &c).unwrap();
        assert_eq!(print_word(&w, &c), "[-2:j]");
    }

    #[test]
    fn element_round_trip() {
        let c = sl2();
        let text = "q^-2*[0:i,1:i] + (1/(1-q^2))*[]";
        let e = parse_element(text, &c).unwrap();
        assert_eq!(print_element(&e, &c), text);
        // signs and bare words
        let e = parse_element("[0:i] - q*[1:i]", &c).unwrap();
        assert_eq!(e.num_terms(), 2);
        assert_eq!(e.coeff(&parse_word("[1:i]", &c).unwrap()), -&RatScalar::q_power(1));
        // printing uses the same syntax
        let printed = print_element(&e, &c);
        assert_eq!(parse_element(&printed, &c).unwrap(), e);
    }

    #[test]
    fn parse_error_positions() {
        let c = sl2();
        let err = parse_element("q^-2*[0:i,1:i] + )", &c).unwrap_err();
        assert!(err.position >= 17);
        let err = parse_word("[0:i,1:zz]", &c).unwrap_err();
        assert!(err.message.contains("zz"));
    }

    #[test]
    fn klr_round_trip() {
        let c = a2();
        let text = "x{1,0}*t{2,1}*e{i,j} + 3/2*e{j,i}";
        let e = parse_klr_element(text, &c).unwrap();
        assert_eq!(crate::klr::print_klr_element(&e, &c), text);
        let e = parse_klr_element("e{}", &c).unwrap();
        assert_eq!(e.num_terms(), 1);
    }

    #[test]
    fn cartan_config() {
        let src = "
            # two-vertex example
            labels i j
            row 2 -2
            row -1 2
            symmetrizers 1 2
            klr_t i j 2
            klr_s i j 1 0 1/3
        ";
        let (c, params) = parse_cartan_config(src).unwrap();
        assert_eq!(c.rank(), 2);
        assert_eq!(c.entry(0, 1), -2);
        assert_eq!(params.t(0, 1), KlrScalar::new(2.into(), 1.into()));
        assert_eq!(params.s(0, 1, 1, 0), KlrScalar::new(1.into(), 3.into()));
        // symmetric closure s_ij;pq = s_ji;qp
        assert_eq!(params.s(1, 0, 0, 1), KlrScalar::new(1.into(), 3.into()));
        assert!(parse_cartan_config("labels i\nrow 3\nsymmetrizers 1").is_err());
    }
}
