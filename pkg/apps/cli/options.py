"""
Shared option parsing for the management commands and the translation of
library errors into exit codes.
"""
from contextlib import contextmanager
import logging

from django.core.management.base import CommandError

from apps.exactla.exceptions import ExactLinearAlgebraError
from apps.exactla.fields import FieldSpec
from apps.jacobian.exceptions import GenericSampleError, JacobianError
from apps.lefschetz.exceptions import EnumerationRefusedError, LefschetzError
from apps.multipoly.exceptions import PolynomialError
from apps.multipoly.parser import infer_num_vars, parse_polynomial
from apps.sectionmap.exceptions import SectionMapError, SmoothnessUndecidedError

from .exceptions import ProbeRefusedError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ASSERTION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_REFUSED = 3

# checked in order, so subclasses come before their bases
ERROR_EXIT_CODES = (
    (EnumerationRefusedError, EXIT_REFUSED),
    (ProbeRefusedError, EXIT_REFUSED),
    (SmoothnessUndecidedError, EXIT_REFUSED),
    (GenericSampleError, EXIT_REFUSED),
    (LefschetzError, EXIT_ASSERTION_FAILED),
    (PolynomialError, EXIT_INPUT_ERROR),
    (ExactLinearAlgebraError, EXIT_INPUT_ERROR),
    (JacobianError, EXIT_INPUT_ERROR),
    (SectionMapError, EXIT_INPUT_ERROR),
    (OSError, EXIT_INPUT_ERROR),
)


@contextmanager
def translate_errors():
    try:
        yield
    except CommandError:
        raise
    except Exception as exc:
        for error_class, code in ERROR_EXIT_CODES:
            if isinstance(exc, error_class):
                logger.debug(f'{type(exc).__name__}: {exc}')
                raise CommandError(str(exc), returncode=code) from exc
        raise


def add_polynomial_arguments(parser):
    parser.add_argument('--field', default='Q', help='Q or F<p>, e.g. F2, F10007.')
    parser.add_argument('--poly', help='Homogeneous polynomial in x0..xn, e.g. "x0^3 + x1^3".')
    parser.add_argument('--poly-file', help='Read the polynomial from this file instead.')
    parser.add_argument('--vars', type=int, help='Number of variables (default: highest index used + 1).')


def read_field(options):
    return FieldSpec.parse(options['field'])


def read_polynomial_text(options):
    text, path = options.get('poly'), options.get('poly_file')
    if text and path:
        raise CommandError('give either --poly or --poly-file, not both', returncode=EXIT_INPUT_ERROR)
    if path:
        with open(path) as handle:
            text = handle.read().strip()
    if not text:
        raise CommandError('a polynomial is required (--poly or --poly-file)', returncode=EXIT_INPUT_ERROR)
    return text


def read_polynomial(options):
    field = read_field(options)
    text = read_polynomial_text(options)
    num_vars = options.get('vars') or infer_num_vars(text)
    return parse_polynomial(text, field, num_vars)


def read_linear_form(text, F):
    """Parse a hyperplane in the ring of F."""
    return parse_polynomial(text, F.field, F.num_vars)
