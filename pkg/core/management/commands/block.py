from django.core.management.base import BaseCommand

from core.forms import BlockClassesForm, BlockSameForm
from core.mixins import EnvelopeCommandMixin, add_output_arguments
from core.services import block_classes_summary, block_same_summary, export_block_classes


class Command(EnvelopeCommandMixin, BaseCommand):
    help = "Limiting blocks of the Brauer algebra in characteristic p"

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="action", required=True)

        same = subparsers.add_parser("same", help="Are two partitions in one limiting block?")
        same.add_argument("lam")
        same.add_argument("mu")
        same.add_argument("--delta", required=True)
        same.add_argument("--p", required=True)
        same.add_argument("--labels", action="store_true", help="Inputs are cell-module labels")
        same.add_argument("--trace", action="store_true", help="Attach a connecting move sequence")
        add_output_arguments(same)

        classes = subparsers.add_parser("classes", help="Block classes of the labels of size n, n-2, ...")
        classes.add_argument("--n", required=True)
        classes.add_argument("--delta", required=True)
        classes.add_argument("--p", required=True)
        classes.add_argument("--xlsx", help="Also write the classes to this spreadsheet")
        add_output_arguments(classes)

    def handle(self, *args, **options):
        if options["action"] == "same":
            data = self.validated(BlockSameForm, options)
            payload = block_same_summary(
                data["lam"], data["mu"], data["delta"], data["p"],
                labels=data["labels"], trace=data["trace"],
            )
            self.emit(options, payload, command="block same")
            return

        data = self.validated(BlockClassesForm, options)
        payload = block_classes_summary(data["n"], data["delta"], data["p"])
        if data["xlsx"]:
            path = export_block_classes(payload["classes"], data["xlsx"])
            payload["result"]["xlsx"] = str(path)
            payload["message"] = f"Exported to {path}"
        self.emit(options, payload, command="block classes")
