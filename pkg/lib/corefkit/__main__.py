from corefkit.cli import main

main()
