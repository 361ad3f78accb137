import logging
import sys

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import APIException, ParseError, ValidationError

from jobs.dispatch import run_job
from jobs.serializers import COMMANDS, FORMATS, SUITES
from jobs.utils import error_pointer, parse_document, render_document

logger = logging.getLogger(__name__)

# Exit codes of the command line surface
EXIT_INVALID_INPUT = 2
EXIT_COMPUTATION_FAILED = 3


class Command(BaseCommand):
    help = (
        "Computes exact volumes of Quot spaces and vortex moduli spaces from a JSON job document "
        "read from --file or standard input. The flags override fields of the document."
    )
    # Tests hand the job document in directly instead of through sys.stdin
    stealth_options = ('stdin',)
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('command', nargs='?', choices=COMMANDS,
                            help="Job to run; overrides the command of the document")
        parser.add_argument('--file', help="Path of the JSON job document, '-' for standard input")
        parser.add_argument('--g', type=int, help="Genus of the curve")
        parser.add_argument('--r', type=int, help="Rank of the split bundle")
        parser.add_argument('--l', help="Comma separated line bundle degrees, e.g. 1,1")
        parser.add_argument('--d', type=int, help="Length of the torsion quotients")
        parser.add_argument('--n', type=int, help="Twist of the Grothendieck embedding")
        parser.add_argument('--ttilde', help="Evaluate at this rational 𝔱, e.g. 5/2")
        parser.add_argument('--format', choices=FORMATS, help="Output format")
        parser.add_argument('--suite', choices=SUITES, help="Verification suite")
        parser.add_argument('--timing', action='store_true', help="Report the wall time in the result")
        parser.add_argument('--workers', type=int, help="Number of worker threads")

    def read_document(self, options, has_overrides):
        if options.get('stdin') is not None:
            return parse_document(options['stdin'].read())
        path = options.get('file')
        if path == '-':
            return parse_document(sys.stdin.read())
        if path:
            try:
                with open(path, 'rb') as handle:
                    return parse_document(handle.read())
            except OSError as error:
                raise CommandError(f"/: cannot read {path}: {error.strerror}", returncode=EXIT_INVALID_INPUT)
        if not has_overrides and not sys.stdin.isatty():
            return parse_document(sys.stdin.read())
        return {}

    def apply_overrides(self, document, options):
        command = options.get('command') or document.get('command')
        if options.get('command'):
            document['command'] = options['command']

        l = None
        if options.get('l') is not None:
            try:
                l = [int(part) for part in options['l'].split(',')]
            except ValueError:
                raise CommandError(f"/l: expected comma separated integers, got {options['l']!r}",
                                   returncode=EXIT_INVALID_INPUT)

        if command == 'sweep':
            # A sweep takes ranges, single flag values become one element ranges
            for name, key in (('g', 'g_values'), ('d', 'd_values')):
                if options.get(name) is not None:
                    document[key] = [options[name]]
            if options.get('r') is not None:
                document['r'] = options['r']
            if l is not None:
                document['l_list'] = [l]
        else:
            for name in ('g', 'r', 'd', 'n'):
                if options.get(name) is not None:
                    document[name] = options[name]
            if l is not None:
                document['l'] = l

        if options.get('ttilde') is not None:
            document['t'] = {"mode": "ttilde-value", "value": options['ttilde']}
        if options.get('suite') is not None:
            document['suite'] = options['suite']
        return document

    def render(self, result, output_format):
        if output_format == 'latex':
            return result.latex
        if output_format == 'plain':
            return result.plain
        return render_document(result.document)

    def handle(self, *args, **options):
        override_names = ('g', 'r', 'l', 'd', 'n', 'ttilde', 'suite')
        has_overrides = any(options.get(name) is not None for name in override_names)
        try:
            document = self.read_document(options, has_overrides)
            if not isinstance(document, dict):
                raise ValidationError({"non_field_errors": ["A job document must be a JSON object."]})
            document = self.apply_overrides(document, options)
            output_format = options.get('format') or document.get('format') or settings.QUOTVOL['DEFAULT_FORMAT']
            result = run_job(document, max_workers=options.get('workers'), timing=options.get('timing', False))
        except CommandError:
            raise
        except (ValidationError, ParseError) as error:
            pointer, message = error_pointer(error.detail)
            raise CommandError(f"{pointer}: {message}", returncode=EXIT_INVALID_INPUT)
        except APIException as error:
            raise CommandError(str(error.detail), returncode=EXIT_COMPUTATION_FAILED)
        except Exception as error:
            logger.exception("quotvol failed")
            raise CommandError(f"computation failed: {error}", returncode=EXIT_COMPUTATION_FAILED)

        text = self.render(result, output_format)
        if text:
            self.stdout.write(text)
