from treekit.cli import main

main()
