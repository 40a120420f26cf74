from representer.commands import (
    solve_cmd,
    admissibility_cmd,
    independence_cmd,
    kernel_cmd,
    rkbs_cmd,
    counterexample_cmd,
    blw_cmd,
    path_cmd,
)

COMMANDS = (
    solve_cmd,
    admissibility_cmd,
    independence_cmd,
    kernel_cmd,
    rkbs_cmd,
    counterexample_cmd,
    blw_cmd,
    path_cmd,
)


def include_commands(subparsers, parents):
    for command in COMMANDS:
        command.register(subparsers, parents)
