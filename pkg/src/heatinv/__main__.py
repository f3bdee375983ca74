from heatinv.cli import main

main()
