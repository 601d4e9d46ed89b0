//! Tokenizer shared by the sequent and combinator-term grammars.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TokenKind {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Turnstile,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(name) => write!(f, "identifier '{name}'"),
            TokenKind::LParen => f.write_str("'('"),
            TokenKind::RParen => f.write_str("')'"),
            TokenKind::Comma => f.write_str("','"),
            TokenKind::Turnstile => f.write_str("'|-'"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Token {
    pub pos: usize,
    pub kind: TokenKind,
}

/// Identifiers start with a letter and continue with letters, digits or `_`.
pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, (usize, String)> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let kind = match c {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            ',' => TokenKind::Comma,
            '|' => {
                chars.next();
                match chars.peek() {
                    Some(&(_, '-')) => TokenKind::Turnstile,
                    _ => return Err((pos, "expected '|-'".into())),
                }
            }
            c if c.is_alphabetic() => {
                let mut name = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token {
                    pos,
                    kind: TokenKind::Ident(name),
                });
                continue;
            }
            other => return Err((pos, format!("unexpected character {other:?}"))),
        };
        chars.next();
        out.push(Token { pos, kind });
    }
    Ok(out)
}

pub(crate) struct Cursor<'a> {
    tokens: &'a [Token],
    at: usize,
    end: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(tokens: &'a [Token], end: usize) -> Self {
        Cursor { tokens, at: 0, end }
    }

    pub fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.at)
    }

    /// Position of the next token, or the end of input.
    pub fn pos(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    pub fn next_or_end(&mut self) -> (usize, Option<&'a TokenKind>) {
        match self.tokens.get(self.at) {
            Some(tok) => {
                self.at += 1;
                (tok.pos, Some(&tok.kind))
            }
            None => (self.end, None),
        }
    }

    pub fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().map(|t| &t.kind) == Some(kind) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    pub fn at_atom_start(&self) -> bool {
        matches!(
            self.peek().map(|t| &t.kind),
            Some(TokenKind::Ident(_) | TokenKind::LParen)
        )
    }

    pub fn expect_rparen(&mut self) -> Result<(), (usize, String)> {
        let pos = self.pos();
        if self.eat(&TokenKind::RParen) {
            Ok(())
        } else {
            Err((pos, "expected ')'".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens() {
        let toks = tokenize("x1, y |- (x1 y)").unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.kind.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                TokenKind::Ident("x1".into()),
                TokenKind::Comma,
                TokenKind::Ident("y".into()),
                TokenKind::Turnstile,
                TokenKind::LParen,
                TokenKind::Ident("x1".into()),
                TokenKind::Ident("y".into()),
                TokenKind::RParen,
            ]
        );
        assert_eq!(toks[3].pos, 6);
    }

    #[test]
    fn rejects_bad_characters() {
        assert_eq!(tokenize("x | y").unwrap_err().0, 2);
        assert!(tokenize("1x").is_err());
        assert!(tokenize("_x").is_err());
    }
}
