#include<iostream.h>
#include<conio.h>
int main(){
int option,value;
cout<<"Enter 1 for even numbers and 2 for odd numbers: ";
cin>>option;
switch(option)
{
case 1:
value=2;
while(value<=50)
{
cout<<value<<" ";
value=value+2;
}
break;
case 2:
value=1;
while(value<=50)
{
cout<<value<<" ";
value=value+2;
}
break;
default:
cout<<"Invalid input";
}
getch();
return 0;
}
