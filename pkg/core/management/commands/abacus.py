from django.core.management.base import BaseCommand

from core.forms import AbacusForm
from core.mixins import EnvelopeCommandMixin, add_output_arguments
from core.services import abacus_summary


class Command(EnvelopeCommandMixin, BaseCommand):
    help = "Draw the p-runner abacus of a partition with b beads"

    def add_arguments(self, parser):
        parser.add_argument("partition", help='Partition such as "5,4" or "5^2,4^2,3"')
        parser.add_argument("--p", required=True, help="Odd prime number of runners")
        parser.add_argument("--b", help="Number of beads (default max(|partition|, p))")
        add_output_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(AbacusForm, options)
        payload = abacus_summary(data["partition"], data["p"], data["b"])
        self.emit(options, payload)
