#include <iostream>
using namespace std;

void printArray(int a[], int n)
{
    for (int k = 0; k < n; k++)
        cout << a[k] << "\t";
    cout << "\n";
}

int main()
{
    int a[10] = {5, 8, 13, 21, 34, 55, 89, 144, 233, 377};
    int n = 10;
    int t;
    cout << "Original array: ";
    printArray(a, n);
    t = a[0];
    a[0] = a[n - 1];
    a[n - 1] = t;
    cout << "Swapped array: ";
    printArray(a, n);
    return 0;
}
