"""Exception hierarchy shared across the toolkit."""


class LexiportError(Exception):
    """Base class for all toolkit errors."""


class ParseError(LexiportError):
    """A dictionary or sheet file could not be parsed.

    Carries the 1-based line number when known.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(LexiportError):
    """Input violated a documented invariant."""


class ConfigError(LexiportError):
    """Configuration problems; `problems` lists every issue found."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class DegenerateDataError(LexiportError):
    """A statistic is undefined for the given data (e.g. zero variance)."""


class EmptyDocumentError(LexiportError):
    """Scoring was asked to handle a document with zero tokens."""


class UnsupportedLanguageError(LexiportError):
    """No stemmer is available for the requested language tag."""


class ProviderError(LexiportError):
    """A translation provider failed.

    `untranslated` lists the record ids left without a candidate.
    """

    def __init__(self, message, untranslated=()):
        self.untranslated = list(untranslated)
        super().__init__(message)
