import json
import logging

from django.core.management.base import CommandError
from django.core.serializers.json import DjangoJSONEncoder

from core.constants import EXIT_DOMAIN, EXIT_FALSE, EXIT_INTERNAL, EXIT_USAGE, FORMAT_VERSION
from core.exceptions import DomainError, InvariantViolation, SearchLimitExceeded, UsageError

logger = logging.getLogger(__name__)


def add_output_arguments(parser):
    parser.add_argument("--json", action="store_true", dest="as_json", help="Print the JSON envelope")
    parser.add_argument("--quiet", action="store_true", help="Do not print renderings")


class EnvelopeCommandMixin:
    """
    Shared plumbing for the block commands: form validation of raw argv
    values, exit codes for library errors, and the JSON envelope.
    """

    requires_system_checks = []

    @property
    def command_name(self) -> str:
        return self.__module__.rsplit(".", 1)[-1]

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except UsageError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc
        except DomainError as exc:
            raise CommandError(str(exc), returncode=EXIT_DOMAIN) from exc
        except (InvariantViolation, SearchLimitExceeded) as exc:
            logger.error(f"{self.command_name}: {exc}")
            raise CommandError(str(exc), returncode=EXIT_INTERNAL) from exc

    def validated(self, form_class, options) -> dict:
        form = form_class(data=options)
        if not form.is_valid():
            logger.debug(f"{self.command_name}: invalid input {form.errors.as_json()}")
            raise CommandError(form.errors.as_text(), returncode=EXIT_USAGE)
        return form.cleaned_data

    def emit(self, options, payload: dict, command: str | None = None):
        """Print the payload as text or envelope; a false verdict exits with 1."""
        command = command or self.command_name
        if options.get("as_json"):
            envelope = {
                "command": command,
                "format_version": FORMAT_VERSION,
                "inputs": payload["inputs"],
                "result": payload["result"],
            }
            self.stdout.write(json.dumps(envelope, sort_keys=True, indent=2, cls=DjangoJSONEncoder))
        elif not options.get("quiet") and payload.get("text"):
            self.stdout.write(payload["text"])

        if not payload.get("verdict", True):
            raise CommandError(f"{command}: false", returncode=EXIT_FALSE)
        if not options.get("as_json") and not options.get("quiet"):
            self.stdout.write(self.style.SUCCESS(payload.get("message", "Done")))
