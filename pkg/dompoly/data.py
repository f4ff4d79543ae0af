import os


def data_folder():
    return os.path.dirname(os.path.abspath(__file__)) + '/data_files'


# Rows n = 1..3 of the domination table, indexed by cardinality i = 0..n. C_1 and C_2
# are not simple graphs; their rows are the formal values that make the three-term
# recurrence start correctly at n = 4, 5.
BASE_ROWS = {
    1: (0, 1),
    2: (0, 2, 1),
    3: (0, 3, 3, 1),
}

# Initial values of the total number of dominating sets S_n.
BASE_TOTALS = {1: 1, 2: 3, 3: 7}


def get_reference_table(filename='table1.txt'):
    """
    :param filename: name of a file in data_files with one row per n and columns j = 1..n
    :return: dict mapping n to a tuple of published counts d(C_n, j) for j = 1..n
    """
    result = {}
    with open(os.path.join(data_folder(), filename)) as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            values = tuple(int(x) for x in line.split())
            result[len(values)] = values

    assert sorted(result.keys()) == list(range(1, len(result) + 1)), \
        'reference table {} has missing rows'.format(filename)
    return result
