from django.core.management.base import BaseCommand

from core.forms import DiagramActForm, DiagramMulForm
from core.mixins import EnvelopeCommandMixin, add_output_arguments
from core.services import diagram_act_summary, diagram_multiply_summary


class Command(EnvelopeCommandMixin, BaseCommand):
    help = "Brauer diagram arithmetic: products and the action on partial diagrams"

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="action", required=True)

        mul = subparsers.add_parser("mul", help='Product x*y, e.g. "[(T1,B2),(T2,B1)]"')
        mul.add_argument("x")
        mul.add_argument("y")
        mul.add_argument("--n")
        mul.add_argument("--delta", required=True, help="Exact rational such as 3 or -1/2")
        mul.add_argument("--p", help="Work with residues mod p")
        add_output_arguments(mul)

        act = subparsers.add_parser("act", help='Action on a partial diagram, e.g. "[(1,2)]"')
        act.add_argument("x")
        act.add_argument("v")
        act.add_argument("--delta", required=True)
        act.add_argument("--p")
        add_output_arguments(act)

    def handle(self, *args, **options):
        if options["action"] == "mul":
            data = self.validated(DiagramMulForm, options)
            payload = diagram_multiply_summary(data["x"], data["y"], data["delta"], data["p"])
            self.emit(options, payload, command="diagram mul")
            return

        data = self.validated(DiagramActForm, options)
        payload = diagram_act_summary(data["x"], data["v"], data["delta"], data["p"])
        self.emit(options, payload, command="diagram act")
