from bockstein.cli.main import main

main()
