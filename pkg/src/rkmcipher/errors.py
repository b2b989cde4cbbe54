"""Exception hierarchy shared by the codec, matrix and cipher modules."""


class RKMError(Exception):
    """Base class for every error raised by this package."""


class CodecError(RKMError):
    pass


class NotInAlphabet(CodecError, ValueError):
    pass


class OddSymbolCount(CodecError, ValueError):
    pass


class ByteOutOfRange(CodecError, ValueError):
    pass


class MatrixError(RKMError):
    pass


class BadMagic(MatrixError):
    pass


class BadDimensions(MatrixError):
    pass


class InvalidMatrix(MatrixError):
    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations[:5])
        more = len(self.violations) - 5
        if more > 0:
            lines += f"; ... {more} more"
        super().__init__(f"invalid key matrix: {lines}")


class SubstitutionKeyError(RKMError):
    """Problems with a substitution key."""


class KeyLengthOutOfRange(SubstitutionKeyError, ValueError):
    pass


class DuplicateIdentifier(SubstitutionKeyError, ValueError):
    pass


class UnknownRowIdentifier(SubstitutionKeyError, LookupError):
    pass


class IntegrityError(RKMError):
    """Ciphertext could not be decrypted consistently."""


class TruncatedBlock(IntegrityError):
    pass


class InconsistentBlock(IntegrityError):
    pass


class NotInRow(IntegrityError):
    pass


class PatternTooRare(RKMError, ValueError):
    pass


class UnknownCipher(RKMError, ValueError):
    pass


class MissingParameter(RKMError, ValueError):
    pass


class EmptyKeyword(RKMError, ValueError):
    pass


class RoundtripMismatch(RKMError):
    pass
