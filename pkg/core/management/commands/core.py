from django.core.management.base import BaseCommand

from core.forms import CoreForm
from core.mixins import EnvelopeCommandMixin, add_output_arguments
from core.services import core_summary


class Command(EnvelopeCommandMixin, BaseCommand):
    help = "p-core and p-weight of a partition"

    def add_arguments(self, parser):
        parser.add_argument("partition")
        parser.add_argument("--p", required=True)
        add_output_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(CoreForm, options)
        self.emit(options, core_summary(data["partition"], data["p"]))
