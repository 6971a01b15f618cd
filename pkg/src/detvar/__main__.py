from detvar.cli import main

main()
