#include <iostream>
using namespace std;

void printReverse(int value)
{
    if (value == 0)
    {
        cout << 0;
        return;
    }
    while (value > 0)
    {
        cout << value % 10;
        value = value / 10;
    }
}

int main()
{
    int value;
    cout << "Please enter a number: ";
    cin >> value;
    cout << "Reverse: ";
    printReverse(value);
    cout << endl;
    return 0;
}
