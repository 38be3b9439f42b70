from django.core.management.base import BaseCommand

from core.forms import OrbitSameForm
from core.mixins import EnvelopeCommandMixin, add_output_arguments
from core.services import orbit_same_summary


class Command(EnvelopeCommandMixin, BaseCommand):
    help = "Decide whether two partitions lie in one dot-action orbit"

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="action", required=True)
        same = subparsers.add_parser("same", help="Same W_p-orbit (or W-orbit with --char0)")
        same.add_argument("lam")
        same.add_argument("mu")
        same.add_argument("--delta", required=True)
        same.add_argument("--p")
        same.add_argument("--char0", action="store_true", help="Finite Weyl group, characteristic 0")
        add_output_arguments(same)

    def handle(self, *args, **options):
        data = self.validated(OrbitSameForm, options)
        payload = orbit_same_summary(
            data["lam"], data["mu"], data["delta"], data["p"], char0=data["char0"]
        )
        self.emit(options, payload, command="orbit same")
