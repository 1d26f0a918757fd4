from interchange.base import GraphsimCommand, add_graph_arguments
from interchange.formats import read_edge_list, write_partition
from interchange.serializers import RepresentSerializer
from partitions.classification import EdgeClassification, class_representative, induced_partition
from partitions.exceptions import check_length


class Command(GraphsimCommand):
    help = "Print the class representative of an edge classification and the partition it induces"

    def add_arguments(self, parser):
        add_graph_arguments(parser)
        parser.add_argument("--bits", help="one 0/1 character per edge, edges sorted by (u, v) with u < v")
        parser.add_argument("--class-one", help="edge list file holding the class-one edges of the graph")

    def handle(self, *args, **options):
        data = self.validated(RepresentSerializer, options)
        g = read_edge_list(data["graph"], one_based=data["one_based"], symmetric=data["symmetric"])
        if "class_one" in data:
            listed = read_edge_list(data["class_one"], one_based=data["one_based"], symmetric=data["symmetric"])
            b = EdgeClassification.from_edges(g, listed.edge_list())
        else:
            b = EdgeClassification.from_bits(data["bits"])
            check_length(g.m, len(b), "edge classification")

        representative = class_representative(g, b)
        partition = induced_partition(g, b)
        self.stdout.write(f"representative {representative}")
        self.stdout.write(f"class_one {b.norm}")
        self.stdout.write(f"representative_class_one {representative.norm}")
        self.stdout.write(f"parts {partition.k}")
        self.stdout.write("# induced partition")
        self.stdout.write(write_partition(partition), ending="")
