"""Exception types shared across the toolkit."""


class CamplensError(Exception):
    """Base class for all toolkit errors."""


class MalformedRecord(CamplensError):
    """A tweet archive line could not be parsed into a record."""


class EmptyGold(CamplensError):
    """An evaluation was requested against an empty gold labeling."""


class EmptyCorpus(CamplensError):
    """No token survived vocabulary construction."""


class NoRepresentableNgrams(CamplensError):
    """A query word has no subword n-grams under the current config."""


class IoFailure(CamplensError):
    """A model or artifact file could not be read or written."""


class VersionMismatch(CamplensError):
    """A model file has an unknown magic, version, or inconsistent layout."""


class MalformedLexicon(CamplensError):
    """A sentiment lexicon file is syntactically or semantically invalid."""


class UnrepresentableAlias(CamplensError):
    """An entity alias has no representation in one of the models."""


class InvalidParams(CamplensError):
    """Synthetic generator parameters violate their invariants."""
