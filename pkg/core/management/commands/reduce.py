from django.core.management.base import BaseCommand

from core.forms import ReduceForm
from core.mixins import EnvelopeCommandMixin, add_output_arguments
from core.services import reduce_summary


class Command(EnvelopeCommandMixin, BaseCommand):
    help = "Reduce the abacus of a partition to its b-reduced form, printing every move"

    def add_arguments(self, parser):
        parser.add_argument("partition")
        parser.add_argument("--p", required=True)
        parser.add_argument("--b", required=True)
        add_output_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(ReduceForm, options)
        payload = reduce_summary(data["partition"], data["p"], data["b"])
        payload["message"] = f"{len(payload['result']['moves'])} moves"
        self.emit(options, payload)
